// Copyright 2026 The MagicLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// magiclab: command-line front end for the library.
//
// Exit codes: 0 success, 1 a verification or check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "magiclab/analysis.h"
#include "magiclab/bestiary.h"
#include "magiclab/clifford.h"
#include "magiclab/error.h"
#include "magiclab/phase_space.h"
#include "magiclab/twirl.h"
#include "magiclab/verify.h"

using namespace magiclab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Errors caused by bad arguments or inputs rather than by a failed computation.
bool is_usage_error(Errc e) {
    switch (e) {
        case Errc::NotOddPrime:
        case Errc::UnknownName:
        case Errc::UnknownSuite:
        case Errc::BadInput:
        case Errc::NotHermitian:
        case Errc::NotNormalized:
        case Errc::ZeroVector:
        case Errc::DimensionMismatch:
        case Errc::TooLarge:
        case Errc::Unsupported:
            return true;
        default:
            return false;
    }
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw MagicError(Errc::BadInput, "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw MagicError(Errc::BadInput, "'" + path + "' is not valid JSON: " + e.what());
    }
}

DensityMatrix read_density(const std::string &path) {
    try {
        return density_from_json(read_json_file(path));
    } catch (const json::exception &e) {
        throw MagicError(Errc::BadInput, "'" + path + "': " + e.what());
    }
}

uint64_t parse_seed(const std::string &s) {
    if (s == "random") {
        std::random_device rd;
        return ((uint64_t)rd() << 32) ^ rd();
    }
    try {
        size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw MagicError(Errc::BadInput, "seed must be a non-negative integer or 'random'");
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int cmd_classes(int p, bool reduced, const std::string &format) {
    auto group = CliffordGroup::enumerate(OddPrime(p));
    auto classes = clifford_conjugacy_classes(group);
    std::vector<ReducedConjugacyClass> red;
    if (reduced) {
        red = reduced_conjugacy_classes(group, classes);
    }
    if (format == "json") {
        std::cout << class_report_json(group, classes, reduced ? &red : nullptr).dump(2) << "\n";
        return kExitOk;
    }
    if (reduced) {
        std::cout << "representative,paper_name,member_classes,size\r\n";
        for (const auto &r : red) {
            size_t total = 0;
            std::string members;
            for (size_t c : r.member_classes) {
                total += classes[c].size();
                members += (members.empty() ? "" : " ") + std::to_string(c);
            }
            std::cout << csv_field(group[r.representative].str()) << "," << csv_field(r.paper_name.value_or(""))
                      << "," << csv_field(members) << "," << total << "\r\n";
        }
    } else {
        std::cout << "representative,paper_name,size\r\n";
        for (const auto &c : classes) {
            std::cout << csv_field(group[c.representative].str()) << "," << csv_field(c.paper_name.value_or(""))
                      << "," << c.size() << "\r\n";
        }
    }
    return kExitOk;
}

int cmd_bestiary(int p, bool check, const std::string &format) {
    auto group = CliffordGroup::enumerate(OddPrime(p));
    auto rows = reproduce_table(group);
    bool ok = std::all_of(rows.begin(), rows.end(), [](const TableRow &r) {
        return r.ok();
    });
    if (format == "csv") {
        std::cout << to_csv(rows);
    } else {
        json out{{"p", p}, {"rows", to_json(rows)}};
        if (check) {
            out["pass"] = ok;
        }
        std::cout << out.dump(2) << "\n";
    }
    if (check && !ok) {
        std::cerr << "bestiary check failed\n";
        return kExitFail;
    }
    return kExitOk;
}

int cmd_wigner(const std::string &state, const std::string &file, int p, const std::string &format, bool paper_layout) {
    if (state.empty() == file.empty()) {
        throw MagicError(Errc::BadInput, "give exactly one of --state or --state-file");
    }
    std::optional<WignerFunction> w;
    if (!state.empty()) {
        w = wigner(named_state(state, OddPrime(p)));
    } else {
        w = wigner(read_density(file));
    }
    if (format == "csv") {
        std::cout << w->to_csv();
    } else if (format == "json") {
        json grid = json::array();
        for (int u = 0; u < w->p().value(); u++) {
            json row = json::array();
            for (int v = 0; v < w->p().value(); v++) {
                row.push_back(w->at(u, v));
            }
            grid.push_back(row);
        }
        std::cout << json{{"p", w->p().value()},       {"grid", grid},
                          {"mana", w->mana()},         {"sum_negativity", w->sum_negativity()},
                          {"min_entry", w->min_entry().first}, {"negative_points", w->negative_points()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << w->to_ascii(paper_layout);
    }
    return kExitOk;
}

int cmd_verify(const std::string &suite, std::optional<int> p, int p_max, const std::string &seed) {
    VerifyOptions opts;
    opts.p = p;
    opts.p_max = p_max;
    opts.seed = parse_seed(seed);
    auto checks = run_suite(suite, opts);
    std::cout << suite_report(suite, checks).dump(2) << "\n";
    for (const auto &c : checks) {
        if (!c.pass) {
            std::cerr << "FAIL " << c.name << " (p=" << c.p << "): expected " << c.expected.dump() << ", got "
                      << c.computed.dump() << "\n";
        }
    }
    return all_pass(checks) ? kExitOk : kExitFail;
}

// A scheme whose channel is exactly the group the generators produce.
std::optional<TwirlScheme> scheme_for(const TwirlChannel &ch) {
    for (auto s : {TwirlScheme::H2d, TwirlScheme::N, TwirlScheme::XVS, TwirlScheme::Symplectic,
                   TwirlScheme::VSDegenerate, TwirlScheme::VMinusIDegenerate, TwirlScheme::Hm5, TwirlScheme::Bm15}) {
        if (!(scheme_prime(s) == ch.p())) {
            continue;
        }
        auto other = scheme_channel(s);
        if (other.size() != ch.size()) {
            continue;
        }
        bool same = std::all_of(ch.elements().begin(), ch.elements().end(), [&](const CliffordElement &e) {
            return std::find(other.elements().begin(), other.elements().end(), e) != other.elements().end();
        });
        if (same) {
            return s;
        }
    }
    return std::nullopt;
}

int cmd_twirl(const std::string &scheme, const std::string &generators, std::optional<int> p, const std::string &file) {
    if (scheme.empty() == generators.empty()) {
        throw MagicError(Errc::BadInput, "give exactly one of --scheme or --generators");
    }
    auto rho = read_density(file);
    if (p && (size_t)*p != rho.dim()) {
        throw MagicError(Errc::DimensionMismatch, "--p does not match the state dimension");
    }
    OddPrime q((long long)rho.dim());
    std::optional<TwirlScheme> s;
    std::optional<TwirlChannel> ch;
    if (!scheme.empty()) {
        s = scheme_from_name(scheme);
        if (!(scheme_prime(*s) == q)) {
            throw MagicError(Errc::DimensionMismatch, "scheme " + scheme + " acts on p=" +
                                                          std::to_string(scheme_prime(*s).value()));
        }
        ch = scheme_channel(*s);
    } else {
        std::vector<CliffordElement> gens;
        for (const auto &name : split(generators, ',')) {
            gens.push_back(named_element(name, q));
        }
        ch = TwirlChannel::generated_by(gens);
        s = scheme_for(*ch);
    }
    auto twirled = twirl(rho, *ch);
    json out{{"group_order", ch->size()}, {"fixed_point_dimension", fixed_point_space_dimension(*ch)}};
    if (s) {
        auto c = post_twirl_coordinates(twirled, *s);
        out.update(to_json(c));
        if (*s == TwirlScheme::Symplectic) {
            auto d = symplectic_depolarize(rho);
            out["delta"] = d.delta;
            out["fidelity"] = d.fidelity;
        }
    } else {
        out["twirled_state"] = to_json(twirled);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_maximize(int p, std::optional<int> case_number, bool global, const std::string &seed) {
    if (case_number.has_value() == global) {
        throw MagicError(Errc::BadInput, "give exactly one of --case or --global");
    }
    if (global) {
        ManaSearchOptions opts;
        opts.seed = parse_seed(seed);
        std::cout << to_json(max_mana_search(OddPrime(p), opts)).dump(2) << "\n";
        return kExitOk;
    }
    if (p != 3) {
        throw MagicError(Errc::Unsupported, "--case applies to p=3 only");
    }
    try {
        auto r = maximize_case(case_pattern(*case_number));
        json out = to_json(r);
        out["case"] = *case_number;
        std::cout << out.dump(2) << "\n";
    } catch (const MagicError &e) {
        if (e.code() != Errc::InfeasiblePattern) {
            throw;
        }
        auto rep = verify_case5_infeasible();
        json out{{"case", *case_number},
                 {"infeasible", true},
                 {"error", errc_name(e.code())},
                 {"message", e.what()},
                 {"sweep", {{"points_checked", rep.points_checked},
                            {"max_negative_count", rep.max_negative_count},
                            {"collinear_triple_found", rep.collinear_triple_found},
                            {"infeasible", rep.infeasible}}}};
        std::cout << out.dump(2) << "\n";
        return rep.infeasible ? kExitOk : kExitFail;
    }
    return kExitOk;
}

int cmd_subgroups(int p, const std::string &state) {
    OddPrime q(p);
    auto group = CliffordGroup::enumerate(q);
    json rows = json::array();
    std::vector<std::string> names;
    if (state.empty()) {
        for (const auto &e : registry(q)) {
            if (e.table_row) {
                names.push_back(e.name);
            }
        }
    } else {
        names.push_back(state);
    }
    for (const auto &n : names) {
        rows.push_back(to_json(stabilizer_report(n, group)));
    }
    std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

int cmd_list_states(std::optional<int> p) {
    json out = json::array();
    for (int q : {3, 5}) {
        if (p && *p != q) {
            continue;
        }
        for (const auto &e : registry(OddPrime(q))) {
            out.push_back({{"name", e.name}, {"p", q}, {"label", e.label}, {"table_row", e.table_row}});
        }
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-qudit Clifford eigenstates, Wigner functions and magic monotones"};
    app.require_subcommand(0, 1);
    bool list_flag = false;
    app.add_flag("--list-states", list_flag, "List registry state names");

    int p = 3;
    std::optional<int> p_opt;
    std::string classes_format, bestiary_format, wigner_format, state, state_file, suite, scheme, generators, seed = "0";
    bool reduced = false, check = false, paper_layout = false, global = false;
    int p_max = 13;
    std::optional<int> case_number;

    auto *classes = app.add_subcommand("classes", "Conjugacy classes of the Clifford group");
    classes->add_option("--p", p, "Odd prime")->required();
    classes->add_flag("--reduced", reduced, "Merge eigenspace-equivalent classes");
    classes->add_option("--format", classes_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

    auto *bestiary = app.add_subcommand("bestiary", "Non-degenerate eigenstate table");
    bestiary->add_option("--p", p, "3 or 5")->required();
    bestiary->add_flag("--check", check, "Compare against closed forms; exit 1 on mismatch");
    bestiary->add_option("--format", bestiary_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

    auto *wig = app.add_subcommand("wigner", "Discrete Wigner function of a state");
    wig->add_option("--state", state, "Registry name");
    wig->add_option("--state-file", state_file, "JSON state or density matrix");
    wig->add_option("--p", p, "Odd prime for --state")->default_val(3);
    wig->add_option("--format", wigner_format, "ascii, csv or json")
        ->check(CLI::IsMember({"ascii", "csv", "json"}))
        ->default_val("ascii");
    wig->add_flag("--paper-layout", paper_layout, "Rows from u = p-1 down to 0");

    auto *ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "theorem2, appendix, tables, twirl, covariance or all")->required();
    ver->add_option("--p", p_opt, "Restrict to one prime");
    ver->add_option("--p-max", p_max, "Largest prime for theorem2")->default_val(13);
    ver->add_option("--seed", seed, "Integer or 'random'")->default_val("0");

    auto *tw = app.add_subcommand("twirl", "Twirl a state and report its coordinates");
    tw->add_option("--scheme", scheme, "2dH, N, XVS, symplectic, VS, V-I, hm5 or Bm15");
    tw->add_option("--generators", generators, "Comma-separated element names, e.g. H,V_S");
    tw->add_option("--p", p_opt, "Odd prime (checked against the state)");
    tw->add_option("--state-file", state_file, "JSON state or density matrix")->required();

    auto *mx = app.add_subcommand("maximize", "Constrained or global magic maximization");
    mx->add_option("--p", p, "Odd prime")->default_val(3);
    mx->add_option("--case", case_number, "Negativity case 1..5 (p=3)");
    mx->add_flag("--global", global, "Global max-mana search");
    mx->add_option("--seed", seed, "Integer or 'random'")->default_val("0");

    auto *sub = app.add_subcommand("subgroups", "Stabilizing subgroups of registry states");
    sub->add_option("--p", p, "3 or 5")->required();
    sub->add_option("--state", state, "Registry name (default: every table row)");

    auto *ls = app.add_subcommand("list-states", "List registry state names");
    ls->add_option("--p", p_opt, "3 or 5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classes) return cmd_classes(p, reduced, classes_format);
        if (*bestiary) return cmd_bestiary(p, check, bestiary_format);
        if (*wig) return cmd_wigner(state, state_file, p, wigner_format, paper_layout);
        if (*ver) return cmd_verify(suite, p_opt, p_max, seed);
        if (*tw) return cmd_twirl(scheme, generators, p_opt, state_file);
        if (*mx) return cmd_maximize(p, case_number, global, seed);
        if (*sub) return cmd_subgroups(p, state);
        if (*ls || list_flag) return cmd_list_states(p_opt);
        std::cout << app.help();
        return kExitUsage;
    } catch (const MagicError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? kExitUsage : kExitFail;
    }
}
