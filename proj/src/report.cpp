#include "pncode/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pncode/quad_form.hpp"
#include "pncode/subfield_code.hpp"

namespace pncode {

namespace {

const std::set<std::string> kKnownChecks = {"verify_pn", "det_relation", "enumerate", "predict",
                                            "puncture",  "dual",         "pless",     "bounds",
                                            "nu"};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer for " + what + ": '" + s + "'");
    }
}

// Element syntax: a plain encoding, "g" for the primitive element, or "g^J".
Fe parse_element(const FieldCtx& F, const std::string& s) {
    if (s == "g") return F.primitive_element();
    if (s.rfind("g^", 0) == 0) return F.pow(F.primitive_element(), parse_u64(s.substr(2), "element power"));
    std::uint64_t v = parse_u64(s, "field element");
    if (v >= F.order()) throw std::invalid_argument("element encoding " + s + " is out of range");
    return Fe(v);
}

std::vector<Fe> parse_element_list(const FieldCtx& F, const std::string& s) {
    std::vector<Fe> out;
    for (const std::string& part : split(s, ','))
        if (!strip(part).empty()) out.push_back(parse_element(F, strip(part)));
    return out;
}

PnFunction build_pn_from_config(const FieldCtx& F, const ExperimentConfig& cfg) {
    auto param = [&](const std::string& key) -> std::optional<std::string> {
        auto it = cfg.params.find(key);
        if (it == cfg.params.end()) return std::nullopt;
        return it->second;
    };
    auto need = [&](const std::string& key) {
        auto v = param(key);
        if (!v) throw std::invalid_argument("family " + cfg.family + " needs param " + key);
        return *v;
    };
    Fe scale = param("scale") ? parse_element(F, *param("scale")) : 1;

    const std::string& fam = cfg.family;
    if (fam == "f1") return PnFunction::f1(F, std::uint32_t(parse_u64(need("k"), "k")), scale);
    if (fam == "cm" || fam == "f2") {
        if (scale != 1)
            throw std::invalid_argument("scale applies to DO families only");
        return PnFunction::coulter_matthews(F, std::uint32_t(parse_u64(need("k"), "k")));
    }
    if (fam == "f3") return PnFunction::f3(F, parse_element(F, need("beta")), scale);
    if (fam == "f4") {
        std::optional<Fe> beta;
        if (param("beta")) beta = parse_element(F, *param("beta"));
        return PnFunction::f4(F, std::uint32_t(parse_u64(need("k"), "k")), beta, scale);
    }
    if (fam == "f5")
        return PnFunction::f5(F, std::uint32_t(parse_u64(need("k"), "k")),
                              parse_element(F, need("beta")), parse_element_list(F, need("c")), scale);
    if (fam == "f6")
        return PnFunction::f6(F, std::uint32_t(parse_u64(need("k"), "k")),
                              std::uint32_t(parse_u64(need("t"), "t")), parse_u64(need("r"), "r"),
                              parse_element(F, need("beta")), parse_element_list(F, need("w")), scale);
    if (fam == "f7") {
        std::optional<Fe> beta;
        if (param("beta")) beta = parse_element(F, *param("beta"));
        return PnFunction::f7(F, std::uint32_t(parse_u64(need("t"), "t")), beta, scale);
    }
    if (fam == "f8") {
        std::optional<Fe> beta;
        if (param("beta")) beta = parse_element(F, *param("beta"));
        return PnFunction::f8(F, std::uint32_t(parse_u64(need("t"), "t")), beta, scale);
    }
    if (fam == "raw") return PnFunction::raw_polynomial(F, parse_element_list(F, need("poly")));
    throw std::invalid_argument("unknown family '" + fam + "'");
}

MatchResult compare_distributions(const WeightDistribution& got, const WeightDistribution& want) {
    MatchResult r;
    if (got.counts == want.counts && got.n == want.n) {
        r.exact = true;
        return r;
    }
    std::set<std::uint32_t> weights;
    for (const auto& [w, c] : got.counts) weights.insert(w);
    for (const auto& [w, c] : want.counts) weights.insert(w);
    for (std::uint32_t w : weights)
        if (got.count_at(w) != want.count_at(w)) {
            r.first_mismatch_weight = w;
            break;
        }
    return r;
}

}  // namespace

bool ExperimentConfig::has_check(const std::string& c) const {
    for (const std::string& x : checks)
        if (x == c || x == "all") return true;
    return false;
}

bool ExperimentConfig::has_explicit_check(const std::string& c) const {
    for (const std::string& x : checks)
        if (x == c) return true;
    return false;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string s = strip(line);
        if (s.empty()) continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
        apply_override(cfg, strip(s.substr(0, eq)), strip(s.substr(eq + 1)));
    }
    return cfg;
}

void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "p")
        cfg.p = std::uint32_t(parse_u64(value, "p"));
    else if (key == "m")
        cfg.m = std::uint32_t(parse_u64(value, "m"));
    else if (key == "family")
        cfg.family = value;
    else if (key == "emit")
        cfg.emit = value;
    else if (key == "budget")
        cfg.budget = parse_u64(value, "budget");
    else if (key == "ceiling")
        cfg.field_ceiling = parse_u64(value, "ceiling");
    else if (key == "name")
        cfg.name = value;
    else if (key == "checks") {
        cfg.checks.clear();
        for (const std::string& c : split(value, ',')) {
            std::string cc = strip(c);
            if (cc.empty()) continue;
            if (cc != "all" && !kKnownChecks.count(cc))
                throw std::invalid_argument("unknown check '" + cc + "'");
            cfg.checks.push_back(cc);
        }
    } else if (key.rfind("param.", 0) == 0)
        cfg.params[key.substr(6)] = value;
    else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

bool Report::all_pass() const {
    if (!complete || !error.empty()) return false;
    auto bad = [](const std::optional<bool>& b) { return b.has_value() && !*b; };
    if (bad(pn_verified) || bad(det_relation_ok) || bad(dual_claim_ok) ||
        bad(punctured_dual_claim_ok) || bad(nu_ok))
        return false;
    if (match && !match->exact) return false;
    if (punctured_match && !punctured_match->exact) return false;
    if (pless && !pless->ok) return false;
    for (const BoundEntry& b : bounds)
        if (!b.ok) return false;
    return true;
}

ReportStatus Report::status() const {
    if (!complete && failed_stage == "budget") return ReportStatus::BudgetExceeded;
    if (!complete && failed_stage == "config") return ReportStatus::InvalidConfig;
    if (!complete) return ReportStatus::InternalError;
    return all_pass() ? ReportStatus::Ok : ReportStatus::Mismatch;
}

Report run_experiment(const ExperimentConfig& cfg) {
    Report rep;
    rep.config = cfg;
    const auto t0 = std::chrono::steady_clock::now();
    std::string stage = "config";
    auto fail = [&](const std::string& why, const std::string& as_stage) {
        rep.complete = false;
        rep.failed_stage = as_stage;
        rep.error = why;
    };

    try {
        for (const std::string& c : cfg.checks)
            if (c != "all" && !kKnownChecks.count(c))
                throw std::invalid_argument("unknown check '" + c + "'");

        stage = "field";
        FieldCtx F = [&] {
            try {
                return make_field(cfg.p, cfg.m, cfg.field_ceiling);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(std::string("config: ") + e.what());
            }
        }();
        rep.modulus = F.modulus_string();
        rep.q = F.order();

        stage = "pn";
        PnFunction f = [&] {
            try {
                return build_pn_from_config(F, cfg);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(std::string("config: ") + e.what());
            }
        }();
        rep.family_label = f.label();
        const bool is_cm = f.family() == PnFamily::F2CM;

        if (cfg.has_check("verify_pn")) {
            stage = "verify_pn";
            rep.pn_verified = verify_pn(f);
        }

        if (f.is_do()) {
            stage = "quadform";
            RankDetReport rd = rank_and_det(trace_form_matrix(F, f, 1));
            rep.det_class = rd.det_class;
            if (cfg.m % 2 == 0) rep.epsilon = epsilon_of(F, f);
            if (cfg.has_check("det_relation")) {
                stage = "det_relation";
                rep.det_relation_ok = check_det_relation(F, f);
            }
        } else if (cfg.has_explicit_check("det_relation")) {
            throw std::invalid_argument("config: det_relation applies to DO families only");
        }

        SubfieldCode code(F, f);
        if (cfg.has_check("enumerate")) {
            stage = "enumerate";
            rep.enumerated = code.weight_distribution(cfg.budget);
            rep.enum_params = code_params(*rep.enumerated);
        }

        if (cfg.has_check("predict")) {
            stage = "predict";
            if (f.family() == PnFamily::Raw)
                throw std::invalid_argument("config: raw functions have no closed-form prediction");
            Prediction pr = is_cm ? predict_cm(cfg.m) : predict_pn_do(cfg.p, cfg.m, rep.epsilon);
            rep.predicted = pr.distribution;
            rep.predicted_source = prediction_source_name(pr.source);
            if (rep.enumerated) rep.match = compare_distributions(*rep.enumerated, *rep.predicted);
        }

        if (cfg.has_check("puncture")) {
            stage = "puncture";
            rep.punctured = code.punctured_distribution(cfg.budget);
            rep.punctured_params = code_params(*rep.punctured);
            if (cfg.has_check("predict") && f.family() != PnFamily::Raw) {
                Prediction pr =
                    predict_punctured(cfg.p, cfg.m, is_cm ? PuncturedKind::Cm : PuncturedKind::PnDo);
                rep.punctured_predicted = pr.distribution;
                rep.punctured_predicted_source = prediction_source_name(pr.source);
                rep.punctured_match = compare_distributions(*rep.punctured, *rep.punctured_predicted);
            }
        }

        if (cfg.has_check("dual")) {
            stage = "dual";
            const WeightDistribution* primal =
                rep.enumerated ? &*rep.enumerated : (rep.predicted ? &*rep.predicted : nullptr);
            if (!primal)
                throw std::invalid_argument("config: dual requires enumerate or predict");
            rep.dual = macwilliams_dual(*primal);
            rep.dual_params = code_params(*rep.dual);
            for (std::uint32_t i = 1; i <= 4; ++i) rep.dual_a[i - 1] = rep.dual->count_at(i);
            if (f.family() != PnFamily::Raw) {
                CodeParams want{rep.q + 1, rep.q - 2 * cfg.m, 4};
                bool ok = *rep.dual_params == want;
                if (is_cm) {
                    Int want_a4 = (cfg.m % 2 == 0 ? 4 : 2) * ipow(3, cfg.m - 1);
                    ok = ok && rep.dual_a[3] == want_a4;
                }
                rep.dual_claim_ok = ok;
            }
            if (rep.punctured) {
                rep.punctured_dual = macwilliams_dual(*rep.punctured);
                if (rep.punctured_dual->k > 0) {
                    rep.punctured_dual_params = code_params(*rep.punctured_dual);
                    if (!is_cm && f.family() != PnFamily::Raw) {
                        if (cfg.p == 3 && cfg.m == 1) {
                            // degenerate [3,3,1] code, dual is the zero code; no claim
                        } else {
                            CodeParams want{rep.q, rep.q - 2 * cfg.m - 1,
                                            std::uint32_t(cfg.p == 3 ? 5 : 4)};
                            rep.punctured_dual_claim_ok = *rep.punctured_dual_params == want;
                        }
                    }
                }
            }
        }

        if (cfg.has_check("pless")) {
            stage = "pless";
            const WeightDistribution* primal =
                rep.enumerated ? &*rep.enumerated : (rep.predicted ? &*rep.predicted : nullptr);
            if (!primal || !rep.dual)
                throw std::invalid_argument("config: pless requires dual plus enumerate or predict");
            rep.pless = pless_verify(*primal, rep.dual_a);
        }

        if (cfg.has_check("bounds")) {
            stage = "bounds";
            CodeParams dp = rep.dual_params ? *rep.dual_params
                                            : CodeParams{rep.q + 1, rep.q - 2 * cfg.m, 4};
            {
                BoundReport br = sphere_packing_check(dp.n, dp.k, dp.d, cfg.p);
                BoundEntry e;
                e.label = "dual vs Sphere Packing";
                e.bound = "SpherePacking";
                e.n = dp.n;
                e.k = dp.k;
                e.d = dp.d;
                e.q = cfg.p;
                e.verdict = verdict_name(br.verdict);
                std::ostringstream w;
                w << "q^k*ball=" << br.packed.str() << " vs q^n=" << br.space.str()
                  << ", best_d=" << br.best_d;
                e.witness = w.str();
                // p >= 5: the dual is distance-optimal; p = 3: the bound
                // admits the actual d and caps it at 6
                e.ok = cfg.p >= 5 ? br.verdict == BoundVerdict::Optimal
                                  : (dp.d <= br.best_d && br.best_d <= 6);
                rep.bounds.push_back(std::move(e));
            }
            if (rep.punctured_dual_params) {
                CodeParams pp = *rep.punctured_dual_params;
                if (cfg.p >= 5) {
                    BoundReport br = sphere_packing_check(pp.n, pp.k, pp.d, cfg.p);
                    BoundEntry e;
                    e.label = "punctured dual vs Sphere Packing";
                    e.bound = "SpherePacking";
                    e.n = pp.n;
                    e.k = pp.k;
                    e.d = pp.d;
                    e.q = cfg.p;
                    e.verdict = verdict_name(br.verdict);
                    std::ostringstream w;
                    w << "q^k*ball=" << br.packed.str() << " vs q^n=" << br.space.str()
                      << ", best_d=" << br.best_d;
                    e.witness = w.str();
                    e.ok = br.verdict == BoundVerdict::Optimal;
                    rep.bounds.push_back(std::move(e));
                } else if (cfg.m > 1) {
                    bool ruled = graph_bound_rules_out(3, pp.n, pp.k, pp.d + 1);
                    Rat bound = graph_bound(3, pp.n, pp.d + 1);
                    BoundEntry e;
                    e.label = "punctured dual vs graph-theory bound at d+1";
                    e.bound = "GraphTheory";
                    e.n = pp.n;
                    e.k = pp.k;
                    e.d = pp.d + 1;
                    e.q = 3;
                    e.verdict = ruled ? "ruled_out" : "inconclusive";
                    std::ostringstream w;
                    w << "q^k=" << ipow(3, pp.k).str() << " vs bound=" << bound.str();
                    e.witness = w.str();
                    e.ok = ruled && pp.d == 5;
                    rep.bounds.push_back(std::move(e));
                }
            }
        }

        if (is_cm ? cfg.has_check("nu") : cfg.has_explicit_check("nu")) {
            stage = "nu";
            if (!is_cm) throw std::invalid_argument("config: nu applies to the cm family only");
            std::uint32_t k = std::uint32_t(parse_u64(cfg.params.at("k"), "k"));
            bool ok = true;
            try {
                for (Fe u = 0; u < F.order(); ++u) nu_count(F, k, u);
            } catch (const consistency_error&) {
                ok = false;
            }
            rep.nu_ok = ok;
        }
    } catch (const capacity_error& e) {
        fail(e.what(), "budget");
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.rfind("config: ", 0) == 0 || stage == "config" || stage == "field" || stage == "pn")
            fail(what, "config");
        else
            fail(what, stage);
    } catch (const std::exception& e) {
        fail(e.what(), stage);
    }

    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

int report_exit_code(const Report& rep) {
    switch (rep.status()) {
        case ReportStatus::Ok: return 0;
        case ReportStatus::Mismatch: return 1;
        case ReportStatus::InvalidConfig: return 2;
        case ReportStatus::BudgetExceeded: return 3;
        case ReportStatus::InternalError: return 1;
    }
    return 1;
}

namespace {

nlohmann::ordered_json config_json(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    if (!cfg.name.empty()) j["name"] = cfg.name;
    j["p"] = cfg.p;
    j["m"] = cfg.m;
    j["family"] = cfg.family;
    nlohmann::ordered_json pj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.params) pj[k] = v;
    j["params"] = pj;
    j["checks"] = cfg.checks;
    j["budget"] = cfg.budget;
    j["ceiling"] = cfg.field_ceiling;
    return j;
}

nlohmann::ordered_json match_json(const MatchResult& m) {
    nlohmann::ordered_json j;
    j["exact"] = m.exact;
    if (m.first_mismatch_weight)
        j["first_mismatch_weight"] = *m.first_mismatch_weight;
    else
        j["first_mismatch_weight"] = nullptr;
    return j;
}

std::string params_str(const CodeParams& p) { return p.str(); }

}  // namespace

std::string emit_report(const Report& rep, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["artifact"] = {{"name", "pncode"}, {"version", rep.version}};
        j["config"] = config_json(rep.config);
        j["field"] = {{"q", rep.q}, {"modulus", rep.modulus}};
        j["function"] = rep.family_label;
        if (rep.pn_verified) j["pn_verified"] = *rep.pn_verified;
        if (rep.det_class) j["det_class"] = *rep.det_class;
        if (rep.epsilon) j["epsilon"] = *rep.epsilon;
        if (rep.det_relation_ok) j["det_relation_ok"] = *rep.det_relation_ok;
        if (rep.enumerated) {
            j["enumerated"] = rep.enumerated->to_json();
            j["enumerated"]["params"] = params_str(*rep.enum_params);
        }
        if (rep.predicted) {
            j["predicted"] = rep.predicted->to_json();
            j["predicted"]["source"] = *rep.predicted_source;
        }
        if (rep.match) j["match"] = match_json(*rep.match);
        if (rep.punctured) {
            j["punctured"] = rep.punctured->to_json();
            j["punctured"]["params"] = params_str(*rep.punctured_params);
        }
        if (rep.punctured_predicted) {
            j["punctured_predicted"] = rep.punctured_predicted->to_json();
            j["punctured_predicted"]["source"] = *rep.punctured_predicted_source;
        }
        if (rep.punctured_match) j["punctured_match"] = match_json(*rep.punctured_match);
        if (rep.dual) {
            nlohmann::ordered_json dj;
            dj["params"] = params_str(*rep.dual_params);
            dj["a1"] = rep.dual_a[0].str();
            dj["a2"] = rep.dual_a[1].str();
            dj["a3"] = rep.dual_a[2].str();
            dj["a4"] = rep.dual_a[3].str();
            if (rep.dual_claim_ok) dj["claim_ok"] = *rep.dual_claim_ok;
            dj["distribution"] = rep.dual->to_json();
            j["dual"] = dj;
        }
        if (rep.punctured_dual) {
            nlohmann::ordered_json dj;
            if (rep.punctured_dual_params)
                dj["params"] = params_str(*rep.punctured_dual_params);
            else
                dj["params"] = "zero code";
            if (rep.punctured_dual_claim_ok) dj["claim_ok"] = *rep.punctured_dual_claim_ok;
            j["punctured_dual"] = dj;
        }
        if (rep.pless) {
            nlohmann::ordered_json pj;
            pj["ok"] = rep.pless->ok;
            std::vector<std::string> rs;
            for (const Int& r : rep.pless->residuals) rs.push_back(r.str());
            pj["residuals"] = rs;
            j["pless"] = pj;
        }
        if (!rep.bounds.empty()) {
            nlohmann::ordered_json bj = nlohmann::ordered_json::array();
            for (const BoundEntry& b : rep.bounds) {
                nlohmann::ordered_json e;
                e["label"] = b.label;
                e["bound"] = b.bound;
                e["claim"] = {b.n, b.k, b.d};
                e["q"] = b.q;
                e["verdict"] = b.verdict;
                e["witness"] = b.witness;
                e["ok"] = b.ok;
                bj.push_back(e);
            }
            j["bounds"] = bj;
        }
        if (rep.nu_ok) j["nu_ok"] = *rep.nu_ok;
        j["status"] = {{"complete", rep.complete},
                       {"failed_stage", rep.failed_stage},
                       {"error", rep.error},
                       {"all_pass", rep.all_pass()}};
        return j.dump(2) + "\n";
    }

    if (format == "csv") {
        std::ostringstream os;
        os << "weight,enumerated,predicted,match\n";
        const WeightDistribution* e = rep.enumerated ? &*rep.enumerated : nullptr;
        const WeightDistribution* p = rep.predicted ? &*rep.predicted : nullptr;
        std::set<std::uint32_t> weights;
        if (e)
            for (const auto& [w, c] : e->counts) weights.insert(w);
        if (p)
            for (const auto& [w, c] : p->counts) weights.insert(w);
        for (std::uint32_t w : weights) {
            Int ce = e ? e->count_at(w) : Int(0);
            Int cp = p ? p->count_at(w) : Int(0);
            os << w << "," << ce.str() << "," << cp.str() << ","
               << ((!e || !p) ? "-" : (ce == cp ? "yes" : "NO")) << "\n";
        }
        return os.str();
    }

    if (format != "text") throw std::invalid_argument("unknown emit format '" + format + "'");

    std::ostringstream os;
    os << "pncode " << rep.version << " experiment report\n";
    if (!rep.config.name.empty()) os << "name: " << rep.config.name << "\n";
    os << "field: F_" << rep.q << " = F_" << rep.config.p << "^" << rep.config.m
       << ", modulus " << rep.modulus << "\n";
    os << "function: " << rep.family_label << "\n";
    if (rep.pn_verified) os << "planarity: " << (*rep.pn_verified ? "verified" : "FAILED") << "\n";
    if (rep.det_class) os << "det class at a=1: " << *rep.det_class << "\n";
    if (rep.epsilon) os << "epsilon: " << *rep.epsilon << "\n";
    if (rep.det_relation_ok)
        os << "determinant relation over all a: " << (*rep.det_relation_ok ? "ok" : "FAILED") << "\n";
    if (rep.enumerated)
        os << "enumerated " << params_str(*rep.enum_params) << ": "
           << rep.enumerated->enumerator_string() << "\n";
    if (rep.predicted)
        os << "predicted (" << *rep.predicted_source << "): " << rep.predicted->enumerator_string()
           << "\n";
    if (rep.match)
        os << "match: "
           << (rep.match->exact
                   ? "exact"
                   : "MISMATCH at weight " + std::to_string(*rep.match->first_mismatch_weight))
           << "\n";
    if (rep.punctured)
        os << "punctured " << params_str(*rep.punctured_params) << ": "
           << rep.punctured->enumerator_string() << "\n";
    if (rep.punctured_predicted)
        os << "punctured predicted (" << *rep.punctured_predicted_source
           << "): " << rep.punctured_predicted->enumerator_string() << "\n";
    if (rep.punctured_match)
        os << "punctured match: "
           << (rep.punctured_match->exact
                   ? "exact"
                   : "MISMATCH at weight " +
                         std::to_string(*rep.punctured_match->first_mismatch_weight))
           << "\n";
    if (rep.dual) {
        os << "dual: " << params_str(*rep.dual_params) << ", A1..A4 = " << rep.dual_a[0].str() << ","
           << rep.dual_a[1].str() << "," << rep.dual_a[2].str() << "," << rep.dual_a[3].str();
        if (rep.dual_claim_ok) os << (*rep.dual_claim_ok ? " (claim ok)" : " (CLAIM FAILED)");
        os << "\n";
    }
    if (rep.punctured_dual) {
        os << "punctured dual: "
           << (rep.punctured_dual_params ? params_str(*rep.punctured_dual_params) : "zero code");
        if (rep.punctured_dual_claim_ok)
            os << (*rep.punctured_dual_claim_ok ? " (claim ok)" : " (CLAIM FAILED)");
        os << "\n";
    }
    if (rep.pless) {
        os << "pless identities: " << (rep.pless->ok ? "all five hold" : "FAILED; residuals");
        if (!rep.pless->ok)
            for (const Int& r : rep.pless->residuals) os << " " << r.str();
        os << "\n";
    }
    for (const BoundEntry& b : rep.bounds)
        os << "bound " << b.label << " [" << b.n << "," << b.k << "," << b.d << "]_" << b.q << ": "
           << b.verdict << (b.ok ? " (as claimed)" : " (UNEXPECTED)") << "; " << b.witness << "\n";
    if (rep.nu_ok) os << "nu counts: " << (*rep.nu_ok ? "ok" : "FAILED") << "\n";
    os << "status: " << (rep.complete ? "complete" : "incomplete (" + rep.failed_stage + ")");
    if (!rep.error.empty()) os << "; error: " << rep.error;
    os << "; elapsed " << rep.elapsed_ms << " ms\n";
    os << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace pncode
