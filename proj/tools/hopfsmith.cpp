/* Copyright (C) 2026 hopfsmith contributors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfsmith/combinatorics.hpp"
#include "hopfsmith/hopf.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using namespace hopfsmith;
using nlohmann::json;

// One parsed command line.  p == 0 together with char0 == true selects the
// characteristic-zero engine over Q[[t]] truncated at t^{trunc}; otherwise p
// is an odd prime and the coefficient ring is F_p[t]/(t^p - q t).
struct Cfg {
    bool char0 = false;
    long p = 0;
    int n = 2;
    long q = 0;
    std::string twist = "vertical:1,2";
    int trunc = 4;
    long degree_cap = 2;
    bool prime_variant = false;
    long seed = 0;
    std::string format = "text";
    std::string out;
};

json cfg_json(const Cfg& c) {
    json j;
    if (c.char0) {
        j["characteristic"] = "0";
        j["trunc"] = c.trunc;
        j["degree_cap"] = c.degree_cap;
    } else {
        j["characteristic"] = c.p;
        j["q"] = c.q;
        j["prime_variant"] = c.prime_variant;
    }
    j["n"] = c.n;
    j["twist"] = c.twist;
    j["seed"] = c.seed;
    return j;
}

unsigned thread_cap() {
    const char* s = std::getenv("HOPFSMITH_THREADS");
    if (!s || !*s) return 1;
    long v = std::strtol(s, nullptr, 10);
    if (v < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw && v > static_cast<long>(hw)) v = hw;
    return static_cast<unsigned>(v);
}

// Reports and tables go to stdout unless --out redirects them to a file.
// Every JSON document is reparsed before leaving the process so the emitted
// text is guaranteed to round-trip.
void emit(const Cfg& cfg, const json& doc, const std::string& text) {
    std::string payload;
    if (cfg.format == "json") {
        payload = doc.dump(2);
        payload += '\n';
        if (json::parse(payload) != doc)
            throw std::runtime_error("serialized document does not round-trip");
    } else {
        payload = text;
    }
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open " + cfg.out);
    f << payload;
}

// ----- generator identifiers -----------------------------------------------

json alpha_json(const MultiIndex& a) {
    json v = json::array();
    for (int i = 0; i < a.n(); ++i) v.push_back(a.e[i]);
    return v;
}

json stag_json(const STag& t) {
    json j;
    j["name"] = t.str();
    if (t.kind == 1) {
        j["kind"] = "corner";
        j["j"] = t.j + 1;
    } else {
        j["kind"] = "pair";
        j["i"] = t.i + 1;
        j["j"] = t.j + 1;
        j["alpha"] = alpha_json(t.alpha);
    }
    return j;
}

json spluskey_json(const SPlusKey& k) {
    json j;
    j["name"] = k.str();
    j["alpha"] = alpha_json(k.alpha);
    if (k.kind == 0) {
        j["kind"] = "interior";
        j["i"] = k.i + 1;
    } else {
        j["kind"] = "last";
    }
    return j;
}

json wmelem_json(const WMElem& w) {
    json terms = json::array();
    for (const auto& [k, v] : w.c)
        terms.push_back(json{{"c", v}, {"alpha", alpha_json(k.first)}, {"direction", k.second + 1}});
    return terms;
}

json wittelem_json(const WittElem& w) {
    json terms = json::array();
    for (const auto& [k, v] : w.c)
        terms.push_back(
            json{{"c", v.get_str()}, {"alpha", alpha_json(k.first)}, {"direction", k.second + 1}});
    return terms;
}

// A tensor rendered as a list of {coeff, legs} records.  Each leg is a PBW
// word, each letter a [generator id, exponent] pair.
template <class Eng, class TensT>
json tens_json(Eng& U, const TensT& x, const std::function<json(int)>& gid) {
    json terms = json::array();
    for (const auto& [key, c] : x) {
        json legs = json::array();
        for (const auto& mono : key) {
            json word = json::array();
            for (const auto& [g, e] : mono.f) word.push_back(json::array({gid(g), e}));
            legs.push_back(word);
        }
        terms.push_back(json{{"coeff", U.R.str(c)}, {"legs", legs}});
    }
    return terms;
}

// ----- engines --------------------------------------------------------------

struct ModEngine {
    using ring = PolyPRing;

    PolyPRing R;
    SAlgebraOps ops;
    PBW<PolyPRing> U;
    std::vector<CarrierChoice> choices;
    std::vector<Carrier<PolyPRing>> chain;

    explicit ModEngine(const Cfg& cfg)
        : R(cfg.p, cfg.q),
          ops(cfg.p, cfg.n, cfg.prime_variant),
          U(R, modular_hooks(R, ops)),
          choices(parse_twist_spec(cfg.twist)) {
        for (const CarrierChoice& c : choices) chain.push_back(lift_carrier(U, ops, c));
    }

    int gens() const { return static_cast<int>(ops.S.basis.size()); }
    long rmax() const { return ops.S.ctx.p - 1; }
    std::function<json(int)> gid() {
        return [this](int g) { return stag_json(ops.S.tags[static_cast<size_t>(g)]); };
    }
};

struct ZeroEngine {
    using ring = SeriesRing;

    SeriesRing R;
    SPlusRegistry reg;
    PBW<SeriesRing> U;
    int base;
    std::vector<CarrierChoice> choices;
    std::vector<Carrier<SeriesRing>> chain;

    explicit ZeroEngine(const Cfg& cfg)
        : R(cfg.trunc), reg(cfg.n), U(R, splus_hooks(R, reg)), base(0),
          choices(parse_twist_spec(cfg.twist)) {
        for (long d = 0; d <= cfg.degree_cap; ++d)
            for (const SPlusKey& k : splus_degree_keys(cfg.n, d)) reg.id(k);
        base = static_cast<int>(reg.size());
        for (const CarrierChoice& c : choices) chain.push_back(lift_carrier(U, reg, c));
    }

    int gens() const { return base; }
    long rmax() const { return R.N; }
    std::function<json(int)> gid() {
        return [this](int g) { return spluskey_json(reg.key(g)); };
    }
};

// ----- basis ----------------------------------------------------------------

int cmd_basis(const Cfg& cfg) {
    std::ostringstream text;
    json doc;
    doc["config"] = cfg_json(cfg);
    json elems = json::array();
    long dim = 0;

    if (cfg.char0) {
        int idx = 0;
        for (long d = 0; d <= cfg.degree_cap; ++d)
            for (const SPlusKey& k : splus_degree_keys(cfg.n, d)) {
                WittElem w = splus_element(k, cfg.n);
                text << "g" << idx << "  " << k.str() << "  =  " << w.str() << "\n";
                elems.push_back(json{
                    {"id", idx}, {"generator", spluskey_json(k)}, {"element", wittelem_json(w)}});
                ++idx;
            }
        dim = idx;
        text << "slice dimension = " << dim << " (degrees 0.." << cfg.degree_cap << ")\n";
    } else {
        SAlgebra S(cfg.p, cfg.n, cfg.prime_variant);
        for (long i = 0; i < S.dim(); ++i) {
            const STag& t = S.tags[static_cast<size_t>(i)];
            const WMElem& w = S.basis[static_cast<size_t>(i)];
            text << "g" << i << "  " << t.str() << "  =  " << w.str() << "\n";
            elems.push_back(json{{"id", i}, {"generator", stag_json(t)}, {"element", wmelem_json(w)}});
        }
        dim = S.dim();
        text << "dim = " << dim << "\n";
    }

    doc["elements"] = elems;
    doc["dimension"] = dim;
    emit(cfg, doc, text.str());
    return 0;
}

// ----- coproduct tables -----------------------------------------------------

template <class EngT>
std::vector<int> resolve_selection(EngT& M, const std::vector<std::string>& sel) {
    std::vector<int> pick;
    if (sel.empty()) {
        for (int g = 0; g < M.gens(); ++g) pick.push_back(g);
        return pick;
    }
    for (const std::string& s : sel) {
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
            int g = static_cast<int>(std::stol(s));
            if (g < 0 || g >= M.gens())
                throw std::runtime_error("unknown generator index: " + s);
            pick.push_back(g);
            continue;
        }
        int found = -1;
        for (int g = 0; g < M.gens(); ++g)
            if (M.U.L.name(g) == s) {
                found = g;
                break;
            }
        if (found < 0) throw std::runtime_error("unknown generator: " + s);
        pick.push_back(found);
    }
    return pick;
}

template <class EngT>
void coproduct_body(EngT& M, const std::vector<std::string>& sel, std::ostringstream& text,
                    json& tables) {
    auto& U = M.U;
    TwistedHopf<typename EngT::ring> H(U, build_twist(U, M.chain, 0, M.rmax()));
    auto gid = M.gid();
    for (int g : resolve_selection(M, sel)) {
        auto x = U.gen(g);
        auto cop = H.coproduct(x);
        auto anti = H.antipode(x);
        auto cou = H.counit(x);
        text << "generator " << U.L.name(g) << "\n";
        text << "  coproduct: " << U.str(cop) << "\n";
        text << "  antipode:  " << U.str(anti) << "\n";
        text << "  counit:    " << U.str(cou) << "\n";
        tables.push_back(json{{"generator", gid(g)},
                              {"coproduct", tens_json(U, cop, gid)},
                              {"antipode", tens_json(U, anti, gid)},
                              {"counit", tens_json(U, cou, gid)}});
    }
}

int cmd_coproduct(const Cfg& cfg, const std::vector<std::string>& sel, bool sl) {
    std::ostringstream text;
    json doc;
    doc["config"] = cfg_json(cfg);
    json tables = json::array();

    if (sl) {
        auto mark = [](bool ok) { return ok ? "ok" : "DIFFERS"; };
        for (const SlRow& r : sl3_table_report(cfg.p, cfg.q)) {
            text << r.name << "  closed:" << mark(r.closed)
                 << "  coproduct-display:" << mark(r.display_coproduct)
                 << "  antipode-display:" << mark(r.display_antipode)
                 << "  worked-row:" << mark(r.worked_row) << "\n";
            tables.push_back(json{{"name", r.name},
                                  {"closed", r.closed},
                                  {"display_coproduct", r.display_coproduct},
                                  {"display_antipode", r.display_antipode},
                                  {"worked_row", r.worked_row}});
        }
    } else if (cfg.char0) {
        ZeroEngine M(cfg);
        coproduct_body(M, sel, text, tables);
    } else {
        ModEngine M(cfg);
        coproduct_body(M, sel, text, tables);
    }

    doc["tables"] = tables;
    emit(cfg, doc, text.str());
    return 0;
}

// ----- verification suites --------------------------------------------------

struct Check {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> factorial_identities_check() {
    auto bad = check_identity_suite(8, 8);
    if (bad.empty()) return {true, ""};
    const IdentityFailure& f = bad.front();
    return {false, f.which + " fails at a=" + f.a.get_str() + " b=" + f.b.get_str() +
                       " s=" + std::to_string(f.s) + " t=" + std::to_string(f.t)};
}

std::pair<bool, std::string> quantization_kernel_check() {
    for (long a = -8; a <= 8; ++a)
        for (long k = -8; k <= 8; ++k)
            for (long l = 0; l <= 8; ++l) grunspan_integral(Int(a), Int(k), l);
    return {true, ""};
}

std::vector<Check> modular_checks(const Cfg& cfg, const std::string& suite, bool distinct) {
    std::vector<Check> out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    size_t ncar = parse_twist_spec(cfg.twist).size();

    if (want("twist-axiom")) {
        out.push_back({"twist cocycle", [cfg] {
                           ModEngine M(cfg);
                           auto tw = build_twist(M.U, M.chain, 0, M.rmax());
                           return std::pair{twist_cocycle_ok(M.U, tw.F), std::string{}};
                       }});
        out.push_back({"twist counit normalization", [cfg] {
                           ModEngine M(cfg);
                           auto tw = build_twist(M.U, M.chain, 0, M.rmax());
                           return std::pair{twist_counit_ok(M.U, tw.F), std::string{}};
                       }});
        out.push_back({"twist two-sided inverse", [cfg] {
                           ModEngine M(cfg);
                           auto tw = build_twist(M.U, M.chain, 0, M.rmax());
                           return std::pair{twist_inverse_ok(M.U, tw.F, tw.Finv), std::string{}};
                       }});
        for (size_t i = 0; i < ncar; ++i)
            out.push_back({"classical Yang-Baxter, carrier " + std::to_string(i + 1), [cfg, i] {
                               ModEngine M(cfg);
                               return std::pair{cybe_ok(M.U, M.chain[i]), std::string{}};
                           }});
    }
    if (want("hopf-axioms")) {
        out.push_back({"coassociativity, counit and antipode axioms", [cfg] {
                           ModEngine M(cfg);
                           TwistedHopf<PolyPRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           std::string w;
                           bool ok = hopf_axioms_ok(H, M.gens(), &w);
                           return std::pair{ok, w};
                       }});
        out.push_back({"restricted relations stay compatible", [cfg] {
                           ModEngine M(cfg);
                           TwistedHopf<PolyPRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           std::string w;
                           bool ok = restricted_welldefined_ok(H, M.gens(), &w);
                           return std::pair{ok, w};
                       }});
    }
    if (want("hopf-ideal")) {
        for (size_t i = 0; i < ncar; ++i)
            out.push_back({"ideal stability under carrier " + std::to_string(i + 1), [cfg, i] {
                               ModEngine M(cfg);
                               std::string w;
                               bool ok = ideal_ad_power_ok(M.ops, M.choices[i], &w);
                               return std::pair{ok, w};
                           }});
    }
    if (want("oracle")) {
        out.push_back({"closed coproduct matches conjugation", [cfg] {
                           ModEngine M(cfg);
                           TwistedHopf<PolyPRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           for (int g = 0; g < M.gens(); ++g) {
                               auto x = M.U.gen(g);
                               if (!M.U.eq(closed_coproduct(M.U, M.chain, x, M.rmax()),
                                           H.coproduct(x)))
                                   return std::pair{false, "first divergence at " + M.U.L.name(g)};
                           }
                           return std::pair{true, std::string{}};
                       }});
        out.push_back({"closed antipode matches conjugation", [cfg] {
                           ModEngine M(cfg);
                           TwistedHopf<PolyPRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           for (int g = 0; g < M.gens(); ++g) {
                               auto x = M.U.gen(g);
                               if (!M.U.eq(closed_antipode(M.U, M.chain, x, M.rmax()),
                                           H.antipode(x)))
                                   return std::pair{false, "first divergence at " + M.U.L.name(g)};
                           }
                           return std::pair{true, std::string{}};
                       }});
    }
    if (want("identities")) {
        out.push_back({"shifted factorial identities", [] { return factorial_identities_check(); }});
        out.push_back(
            {"integrality of the quantization kernel", [] { return quantization_kernel_check(); }});
        for (size_t i = 0; i < ncar; ++i)
            out.push_back({"grouplike pair relations, carrier " + std::to_string(i + 1), [cfg, i] {
                               ModEngine M(cfg);
                               TwistedHopf<PolyPRing> H(
                                   M.U, build_twist(M.U, {M.chain[i]}, 0, M.rmax()));
                               std::string w;
                               bool ok = radford_ok(H, M.chain[i], &w);
                               return std::pair{ok, w};
                           }});
        out.push_back({"special algebra dimension", [cfg] {
                           SAlgebra S(cfg.p, cfg.n, cfg.prime_variant);
                           mpz_class pn;
                           mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(cfg.p),
                                         static_cast<unsigned long>(cfg.n));
                           mpz_class expect = cfg.prime_variant ? mpz_class((cfg.n - 1) * pn + 1)
                                                                : mpz_class((cfg.n - 1) * (pn - 1));
                           bool ok = expect == S.dim();
                           return std::pair{ok, "counted " + std::to_string(S.dim()) +
                                                    ", formula gives " + expect.get_str()};
                       }});
        if (cfg.n == 3 && !cfg.prime_variant)
            out.push_back({"degree-zero matrix slice table", [cfg] {
                               for (const SlRow& r : sl3_table_report(cfg.p, cfg.q)) {
                                   bool expect_worked = r.name != "E31";
                                   if (!(r.closed && r.display_coproduct && r.display_antipode &&
                                         r.worked_row == expect_worked))
                                       return std::pair{false, "row " + r.name +
                                                                   " deviates from the recorded "
                                                                   "agreement pattern"};
                               }
                               return std::pair{true, std::string("all rows agree with the oracle "
                                                                  "except the known E31 worked row")};
                           }});
        out.push_back({"deformation vanishes at t = 0", [cfg] {
                           ModEngine M(cfg);
                           TwistedHopf<PolyPRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           std::string w;
                           bool ok = specializes_to_untwisted(H, M.gens(), &w);
                           return std::pair{ok, w};
                       }});
    }
    if (distinct)
        out.push_back({"chain deformations are pairwise distinct", [cfg] {
                           Cfg c = cfg;
                           c.twist = "vertical:2,1";
                           ModEngine M(c);
                           auto c31 = lift_carrier(M.U, M.ops, parse_carrier_choice("vertical:3,1"));
                           TwistedHopf<PolyPRing> A(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           TwistedHopf<PolyPRing> B(
                               M.U, build_twist(M.U, {M.chain[0], c31}, 0, M.rmax()));
                           std::string sep = separating_generator(A, B, M.gens());
                           if (sep.empty())
                               return std::pair{false,
                                                std::string("structures agree on every generator")};
                           return std::pair{true, "coproducts separated at " + sep};
                       }});
    return out;
}

std::vector<Check> zero_checks(const Cfg& cfg, const std::string& suite, bool distinct) {
    std::vector<Check> out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    size_t ncar = parse_twist_spec(cfg.twist).size();

    if (want("twist-axiom")) {
        out.push_back({"twist cocycle", [cfg] {
                           ZeroEngine M(cfg);
                           auto tw = build_twist(M.U, M.chain, 0, M.rmax());
                           return std::pair{twist_cocycle_ok(M.U, tw.F), std::string{}};
                       }});
        out.push_back({"twist counit normalization", [cfg] {
                           ZeroEngine M(cfg);
                           auto tw = build_twist(M.U, M.chain, 0, M.rmax());
                           return std::pair{twist_counit_ok(M.U, tw.F), std::string{}};
                       }});
        out.push_back({"twist two-sided inverse", [cfg] {
                           ZeroEngine M(cfg);
                           auto tw = build_twist(M.U, M.chain, 0, M.rmax());
                           return std::pair{twist_inverse_ok(M.U, tw.F, tw.Finv), std::string{}};
                       }});
        for (size_t i = 0; i < ncar; ++i)
            out.push_back({"classical Yang-Baxter, carrier " + std::to_string(i + 1), [cfg, i] {
                               ZeroEngine M(cfg);
                               return std::pair{cybe_ok(M.U, M.chain[i]), std::string{}};
                           }});
    }
    if (want("hopf-axioms"))
        out.push_back({"coassociativity, counit and antipode axioms", [cfg] {
                           ZeroEngine M(cfg);
                           TwistedHopf<SeriesRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           std::string w;
                           bool ok = hopf_axioms_ok(H, M.gens(), &w);
                           return std::pair{ok, w};
                       }});
    if (want("oracle")) {
        out.push_back({"closed coproduct matches conjugation", [cfg] {
                           ZeroEngine M(cfg);
                           TwistedHopf<SeriesRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           for (int g = 0; g < M.gens(); ++g) {
                               auto x = M.U.gen(g);
                               if (!M.U.eq(closed_coproduct(M.U, M.chain, x, M.rmax()),
                                           H.coproduct(x)))
                                   return std::pair{false, "first divergence at " + M.U.L.name(g)};
                           }
                           return std::pair{true, std::string{}};
                       }});
        out.push_back({"closed antipode matches conjugation", [cfg] {
                           ZeroEngine M(cfg);
                           TwistedHopf<SeriesRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           for (int g = 0; g < M.gens(); ++g) {
                               auto x = M.U.gen(g);
                               if (!M.U.eq(closed_antipode(M.U, M.chain, x, M.rmax()),
                                           H.antipode(x)))
                                   return std::pair{false, "first divergence at " + M.U.L.name(g)};
                           }
                           return std::pair{true, std::string{}};
                       }});
    }
    if (want("identities")) {
        out.push_back({"shifted factorial identities", [] { return factorial_identities_check(); }});
        out.push_back(
            {"integrality of the quantization kernel", [] { return quantization_kernel_check(); }});
        out.push_back({"deformation vanishes at t = 0", [cfg] {
                           ZeroEngine M(cfg);
                           TwistedHopf<SeriesRing> H(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           std::string w;
                           bool ok = specializes_to_untwisted(H, M.gens(), &w);
                           return std::pair{ok, w};
                       }});
    }
    if (distinct)
        out.push_back({"chain deformations are pairwise distinct", [cfg] {
                           Cfg c = cfg;
                           c.twist = "vertical:2,1";
                           ZeroEngine M(c);
                           auto c31 = lift_carrier(M.U, M.reg, parse_carrier_choice("vertical:3,1"));
                           TwistedHopf<SeriesRing> A(M.U, build_twist(M.U, M.chain, 0, M.rmax()));
                           TwistedHopf<SeriesRing> B(
                               M.U, build_twist(M.U, {M.chain[0], c31}, 0, M.rmax()));
                           std::string sep = separating_generator(A, B, M.gens());
                           if (sep.empty())
                               return std::pair{false,
                                                std::string("structures agree on every generator")};
                           return std::pair{true, "coproducts separated at " + sep};
                       }});
    return out;
}

int cmd_verify(const Cfg& cfg, std::string suite, bool distinct) {
    for (const CarrierChoice& c : parse_twist_spec(cfg.twist))
        validate_carrier_choice(c, cfg.n);
    if (distinct && cfg.n < 3)
        throw std::runtime_error("--distinct-chains compares the diagonal chains and needs n >= 3");
    if (cfg.char0 && suite == "hopf-ideal")
        throw std::runtime_error("the hopf-ideal suite needs a modular configuration (--p)");
    if (suite.empty()) suite = distinct ? "none" : "all";

    // a chain of several carriers is only a valid selector when the carriers
    // commute; probe once so a bad selector is a configuration error rather
    // than a failed check
    if (parse_twist_spec(cfg.twist).size() > 1) {
        if (cfg.char0) {
            ZeroEngine M(cfg);
            build_twist(M.U, M.chain, 0, M.rmax());
        } else {
            ModEngine M(cfg);
            build_twist(M.U, M.chain, 0, M.rmax());
        }
    }

    std::vector<Check> checks =
        cfg.char0 ? zero_checks(cfg, suite, distinct) : modular_checks(cfg, suite, distinct);
    if (checks.empty()) throw std::runtime_error("no checks selected for this configuration");

    std::vector<std::pair<bool, std::string>> res(checks.size());
    auto run_one = [&](size_t i) {
        try {
            res[i] = checks[i].run();
        } catch (const std::exception& e) {
            res[i] = {false, std::string("exception: ") + e.what()};
        }
    };
    unsigned cap = thread_cap();
    if (cap <= 1) {
        for (size_t i = 0; i < checks.size(); ++i) run_one(i);
    } else {
        for (size_t base = 0; base < checks.size(); base += cap) {
            std::vector<std::future<void>> batch;
            size_t hi = std::min(base + cap, checks.size());
            for (size_t i = base; i < hi; ++i)
                batch.push_back(std::async(std::launch::async, run_one, i));
            for (auto& f : batch) f.get();
        }
    }

    std::ostringstream text;
    json doc;
    doc["config"] = cfg_json(cfg);
    json rows = json::array();
    size_t passed = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        const auto& [ok, witness] = res[i];
        if (ok) ++passed;
        text << (ok ? "ok    " : "FAIL  ") << checks[i].name;
        if (!witness.empty()) text << ": " << witness;
        text << "\n";
        json row{{"name", checks[i].name}, {"pass", ok}};
        if (!witness.empty()) row["witness"] = witness;
        rows.push_back(row);
    }
    size_t failed = checks.size() - passed;
    text << checks.size() << " checks, " << passed << " passed";
    if (failed) text << ", " << failed << " failed";
    text << "\n";
    doc["report"] = json{{"suite", suite},
                         {"checks", rows},
                         {"total", checks.size()},
                         {"passed", passed},
                         {"failed", failed}};
    emit(cfg, doc, text.str());
    return failed == 0 ? 0 : 1;
}

// ----- command line ---------------------------------------------------------

void add_common(CLI::App* cmd, Cfg& cfg) {
    cmd->add_option("--p", cfg.p, "odd prime characteristic");
    cmd->add_flag("--char0", cfg.char0, "work over Q[[t]] truncated at the --trunc order");
    cmd->add_option("--n", cfg.n, "number of variables")->check(CLI::Range(2, 16));
    cmd->add_option("--q", cfg.q, "scalar q in the coefficient ring F_p[t]/(t^p - q t)");
    cmd->add_option("--twist", cfg.twist,
                    "carrier selector: vertical:k,k' | horizontal:k,k',m | chain:i, "
                    "'*'-separated for products");
    cmd->add_option("--trunc", cfg.trunc, "series truncation order in characteristic zero")
        ->check(CLI::Range(1, 12));
    cmd->add_option("--degree-cap", cfg.degree_cap,
                    "top degree of the enumerated slice in characteristic zero")
        ->check(CLI::Range(0, 12));
    cmd->add_flag("--prime-variant", cfg.prime_variant,
                  "use the enlarged algebra with the corner derivations");
    cmd->add_option("--seed", cfg.seed, "echoed into reports");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", cfg.out, "write the report to FILE instead of stdout");
}

void finalize(Cfg& cfg, CLI::App* cmd) {
    bool has_p = cmd->count("--p") > 0;
    if (cfg.char0 && has_p)
        throw std::runtime_error("--p and --char0 are mutually exclusive");
    if (!cfg.char0 && !has_p)
        throw std::runtime_error("pick a characteristic: --p P or --char0");
    if (cfg.char0) {
        if (cmd->count("--q")) throw std::runtime_error("--q needs --p");
        if (cfg.prime_variant) throw std::runtime_error("--prime-variant needs --p");
    } else {
        if (cmd->count("--trunc"))
            throw std::runtime_error("--trunc applies to --char0 only");
        if (cmd->count("--degree-cap"))
            throw std::runtime_error("--degree-cap applies to --char0 only");
        require_odd_prime(cfg.p);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformed Hopf structures on divergence-zero Cartan type algebras"};
    app.require_subcommand(1);

    Cfg cfg;
    std::vector<std::string> gen_sel;
    bool sl = false;
    std::string suite;
    bool distinct = false;

    CLI::App* basis = app.add_subcommand("basis", "enumerate the algebra basis");
    add_common(basis, cfg);

    CLI::App* cop = app.add_subcommand(
        "coproduct", "deformed coproduct, antipode and counit of selected generators");
    add_common(cop, cfg);
    cop->add_option("--gen", gen_sel, "generator index or name, repeatable; default all");
    cop->add_flag("--sl", sl, "report the degree-zero 3x3 matrix slice comparison table");

    CLI::App* ver = app.add_subcommand("verify", "run verification suites");
    add_common(ver, cfg);
    ver->add_option("suite", suite, "twist-axiom|hopf-axioms|hopf-ideal|oracle|identities|all")
        ->check(CLI::IsMember(
            {"twist-axiom", "hopf-axioms", "hopf-ideal", "oracle", "identities", "all"}));
    ver->add_flag("--distinct-chains", distinct,
                  "check that the two shortest diagonal chains deform inequivalently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (basis->parsed()) {
            finalize(cfg, basis);
            return cmd_basis(cfg);
        }
        if (cop->parsed()) {
            if (sl) {
                if (cfg.char0) throw std::runtime_error("--sl needs a modular configuration (--p)");
                if (cop->count("--n") && cfg.n != 3)
                    throw std::runtime_error("--sl reports the n = 3 slice");
                cfg.n = 3;
            }
            finalize(cfg, cop);
            return cmd_coproduct(cfg, gen_sel, sl);
        }
        finalize(cfg, ver);
        return cmd_verify(cfg, suite, distinct);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
