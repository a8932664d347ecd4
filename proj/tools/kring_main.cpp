#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kring/adams_search.hpp"
#include "kring/cone.hpp"
#include "kring/endomorphism.hpp"
#include "kring/error.hpp"
#include "kring/galois.hpp"
#include "kring/pipeline.hpp"
#include "kring/rank3.hpp"
#include "kring/rank4.hpp"
#include "kring/ring_analysis.hpp"
#include "kring/ring_io.hpp"
#include "kring/verlinde.hpp"
#include "kring/version.hpp"

namespace {

using namespace kring;

// raised when a loaded ring fails its axiom check: a verification failure
// (exit 1), distinct from malformed input (exit 2)
struct LoadVerifyError {
    std::string message;
};

struct GlobalOpts {
    std::string format = "table";
    std::string output;  // empty: stdout
    int workers = 1;
};

void emit_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output path: " + path);
    f << text;
}

ojson envelope(const std::string& command, ojson config, ojson results) {
    ojson j;
    j["tool"] = tool_name;
    j["version"] = version_string;
    j["command"] = command;
    j["config"] = std::move(config);
    j["results"] = std::move(results);
    return j;
}

// the worker count is deliberately absent: reports must be byte-identical
// across worker counts, so execution plumbing cannot appear in them
ojson base_config(const GlobalOpts& g) {
    ojson c;
    c["format"] = g.format;
    c["output"] = g.output.empty() ? "-" : g.output;
    return c;
}

void emit_report(const GlobalOpts& g, const std::string& command, const ojson& config,
                 const ojson& results, const std::string& table) {
    if (g.format == "json") {
        emit_text(envelope(command, config, results).dump(2) + "\n", g.output);
    } else {
        std::string head = std::string(tool_name) + " " + version_string + "\n" +
                           "command: " + command + "\nconfig: " + config.dump() + "\n";
        emit_text(head + table, g.output);
    }
}

std::vector<long> parse_primes_arg(const std::string& s) {
    std::vector<long> out;
    try {
        size_t dots = s.find("..");
        if (dots != std::string::npos) {
            long lo = std::stol(s.substr(0, dots));
            long hi = std::stol(s.substr(dots + 2));
            out = primes_in_range(lo, hi);
        } else {
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (!tok.empty()) out.push_back(std::stol(tok));
            }
        }
    } catch (const std::exception&) {
        throw InvalidInput("--primes: cannot parse '" + s + "' (use \"5..100\" or \"5,7,11\")");
    }
    if (out.empty()) throw InvalidInput("--primes: no primes in '" + s + "'");
    for (long p : out) require_verlinde_prime(p);
    return out;
}

std::string combo_string(const Vec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        if (s.empty()) {
            if (sgn(v[i]) < 0) s += "-";
        } else {
            s += (sgn(v[i]) < 0) ? " - " : " + ";
        }
        Int mag = abs(v[i]);
        if (mag != 1) s += mag.get_str() + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

ojson vec_json(const Vec& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(x.get_si());
    return a;
}

ojson imat_json(const IMat& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_si());
        rows.push_back(std::move(row));
    }
    return rows;
}

BasedRing cli_load_ring(const std::string& path, bool skip_verify) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open ring file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    BasedRing r = parse_ring(buf.str());
    if (!skip_verify) {
        AxiomCheck check = r.verify_axioms();
        if (!check.ok)
            throw LoadVerifyError{"ring file " + path + " fails axiom '" + check.axiom +
                                  "': " + check.witness};
    }
    return r;
}

// ---------------------------------------------------------------- verlinde

int cmd_verlinde_build(const GlobalOpts& g, long p, bool plus) {
    // emits the bare canonical ring JSON so the output is itself a ring file
    BasedRing r = plus ? build_verlinde_plus(p) : build_verlinde(p);
    emit_text(ring_to_json_string(r), g.output);
    return 0;
}

struct NamedCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};

std::vector<NamedCheck> verlinde_checks(long p) {
    std::vector<NamedCheck> out;
    auto push = [&](const std::string& name, bool ok, const std::string& witness = "") {
        out.push_back({name, ok, witness});
    };
    BasedRing full = build_verlinde(p);
    BasedRing plus = build_verlinde_plus(p);
    AxiomCheck af = full.verify_axioms();
    push("axioms (full ring)", af.ok, af.witness);
    AxiomCheck ap = plus.verify_axioms();
    push("axioms (odd subring)", ap.ok, ap.witness);
    IMat psi = adams_verlinde(p);
    IMat psi_plus = adams_verlinde_plus(p);
    EndoCheck ef = endo_check(full, psi);
    push("Adams homomorphism (full ring)", ef.all(), ef.witness);
    EndoCheck ep = endo_check(plus, psi_plus);
    push("Adams homomorphism (odd subring)", ep.all(), ep.witness);
    bool odd_support = true;
    for (int j = 0; j < psi.cols() && odd_support; ++j)
        for (int i = 0; i < psi.rows(); ++i)
            if (psi.at(i, j) != 0 && i % 2 != 0) {
                odd_support = false;
                break;
            }
    push("Adams image in the odd span", odd_support);
    bool antisym = true;
    for (long r = 1; r <= p - 1 && antisym; ++r)
        for (int i = 0; i < psi.rows(); ++i)
            if (psi.at(i, static_cast<int>(r - 1)) !=
                -psi.at(i, static_cast<int>(p - r - 1))) {
                antisym = false;
                break;
            }
    push("psi2(L_r) = -psi2(L_{p-r})", antisym);
    CongruenceCheck cc = dim_mod_p_check(p);
    push("dimension mod p homomorphism", cc.ok, cc.witness);
    bool se_ok = true;
    std::string se_witness;
    for (long t = 1; t <= p - 1 && se_ok; ++t) {
        try {
            sym_ext_squares(p, t);
        } catch (const InternalCheckFailure& e) {
            se_ok = false;
            se_witness = "t = " + std::to_string(t) + ": " + e.what();
        }
    }
    push("sym/ext squares nonnegative integral", se_ok, se_witness);
    return out;
}

int cmd_verlinde_verify(const GlobalOpts& g, const std::vector<long>& primes) {
    ojson results = ojson::array();
    std::string table;
    bool all_ok = true;
    for (long p : primes) {
        std::vector<NamedCheck> checks = verlinde_checks(p);
        ojson jchecks = ojson::array();
        bool ok = true;
        for (const NamedCheck& c : checks) {
            ojson jc;
            jc["name"] = c.name;
            jc["ok"] = c.ok;
            if (!c.ok) jc["witness"] = c.witness;
            jchecks.push_back(std::move(jc));
            ok = ok && c.ok;
        }
        ojson entry;
        entry["p"] = p;
        entry["ok"] = ok;
        entry["checks"] = std::move(jchecks);
        results.push_back(std::move(entry));
        table += "p = " + std::to_string(p) + ": " + (ok ? "PASS" : "FAIL") + "\n";
        for (const NamedCheck& c : checks) {
            table += std::string("  [") + (c.ok ? "ok" : "FAIL") + "] " + c.name;
            if (!c.ok) table += "  (" + c.witness + ")";
            table += "\n";
        }
        all_ok = all_ok && ok;
    }
    ojson config = base_config(g);
    config["primes"] = primes;
    emit_report(g, "verlinde verify", config, results, table);
    return all_ok ? 0 : 1;
}

int cmd_verlinde_adams(const GlobalOpts& g, long p, bool plus) {
    BasedRing r = plus ? build_verlinde_plus(p) : build_verlinde(p);
    IMat psi = plus ? adams_verlinde_plus(p) : adams_verlinde(p);
    ojson entry;
    entry["p"] = p;
    entry["basis"] = r.labels();
    entry["matrix"] = imat_json(psi);
    std::string table;
    for (int j = 0; j < psi.cols(); ++j) {
        Vec img(r.rank());
        for (int i = 0; i < r.rank(); ++i) img[i] = psi.at(i, j);
        table += "psi2(" + r.label(j) + ") = " + combo_string(img, r.labels()) + "\n";
    }
    ojson config = base_config(g);
    config["p"] = p;
    config["plus"] = plus;
    emit_report(g, "verlinde adams", config, ojson::array({entry}), table);
    return 0;
}

int cmd_verlinde_fixed_points(const GlobalOpts& g, long p, long bound, double budget) {
    std::vector<Vec> pts = fixed_nonneg_points(p, bound, budget);
    BasedRing r = build_verlinde(p);
    ojson jpts = ojson::array();
    std::string table;
    for (const Vec& v : pts) {
        ojson e;
        e["coeffs"] = vec_json(v);
        e["value"] = combo_string(v, r.labels());
        jpts.push_back(std::move(e));
        table += combo_string(v, r.labels()) + "\n";
    }
    ojson entry;
    entry["p"] = p;
    entry["count"] = pts.size();
    entry["points"] = std::move(jpts);
    ojson config = base_config(g);
    config["p"] = p;
    config["bound"] = bound;
    config["budget"] = std::to_string(budget);
    emit_report(g, "verlinde fixed-points", config, ojson::array({entry}), table);
    return 0;
}

// ------------------------------------------------------------------ galois

int cmd_galois_orbits(const GlobalOpts& g, long p, long m) {
    GaloisOrbitData data = galois_orbits(p, m);
    ojson entry;
    entry["p"] = data.p;
    entry["m"] = data.m;
    entry["k"] = data.k;
    entry["subgroup"] = data.subgroup;
    ojson orbs = ojson::array();
    std::string table = "k = " + std::to_string(data.k) + " orbits of size " +
                        std::to_string(data.m) + "\n";
    for (size_t i = 0; i < data.orbits.size(); ++i) {
        orbs.push_back(data.orbits[i]);
        table += "orbit " + std::to_string(i) + ": {";
        for (size_t j = 0; j < data.orbits[i].size(); ++j)
            table += (j ? ", " : "") + std::to_string(data.orbits[i][j]);
        table += "}\n";
    }
    entry["orbits"] = std::move(orbs);
    ojson config = base_config(g);
    config["p"] = p;
    config["m"] = m;
    emit_report(g, "galois orbits", config, ojson::array({entry}), table);
    return 0;
}

int cmd_galois_rank_bound(const GlobalOpts& g, long p) {
    RankBoundReport rep = verify_rank_bound(p);
    ojson entries = ojson::array();
    std::string table;
    for (const RankBoundEntry& e : rep.entries) {
        ojson je;
        je["k"] = e.k;
        je["m"] = e.m;
        je["parity"] = e.odd_parity ? "odd" : "even";
        je["cone_dim"] = e.cone_dim;
        je["signs_mixed"] = e.signs_mixed;
        je["ok"] = e.ok();
        entries.push_back(std::move(je));
        table += "k = " + std::to_string(e.k) + ", m = " + std::to_string(e.m) +
                 ", parity = " + (e.odd_parity ? "odd" : "even") +
                 ": cone dim " + std::to_string(e.cone_dim) + " < k, signs " +
                 (e.signs_mixed ? "mixed" : "NOT mixed") + " -> " +
                 (e.ok() ? "ok" : "FAIL") + "\n";
    }
    if (rep.entries.empty()) table = "no proper intermediate divisors\n";
    ojson entry;
    entry["p"] = rep.p;
    entry["ok"] = rep.ok;
    entry["entries"] = std::move(entries);
    ojson config = base_config(g);
    config["p"] = p;
    emit_report(g, "galois rank-bound", config, ojson::array({entry}), table);
    return rep.ok ? 0 : 1;
}

int cmd_galois_embed(const GlobalOpts& g, long p) {
    bool commutes = adams_embedding_commutes(p);
    bool mult = embedding_multiplicative(p);
    ojson entry;
    entry["p"] = p;
    entry["adams_commutes_with_squaring"] = commutes;
    entry["embedding_multiplicative"] = mult;
    entry["ok"] = commutes && mult;
    std::string table = std::string("Adams commutes with Galois squaring: ") +
                        (commutes ? "yes" : "NO") + "\nembedding multiplicative: " +
                        (mult ? "yes" : "NO") + "\n";
    ojson config = base_config(g);
    config["p"] = p;
    emit_report(g, "galois embed", config, ojson::array({entry}), table);
    return (commutes && mult) ? 0 : 1;
}

// ---------------------------------------------------------------- classify

std::string pipeline_table(const PipelineResult& res) {
    std::string table;
    for (const ObstructionReport& rep : res.reports) {
        std::string params = "(";
        for (size_t i = 0; i < rep.params.size(); ++i)
            params += (i ? "," : "") + rep.params[i].get_str();
        params += ")";
        table += params + ": " + rep.status;
        if (!rep.known_name.empty()) table += " [" + rep.known_name + "]";
        if (!rep.elimination_reason.empty()) table += " -- " + rep.elimination_reason;
        table += "\n";
    }
    table += "survivor classes:";
    if (res.survivor_classes.empty()) table += " none";
    for (const auto& cls : res.survivor_classes) {
        table += " (";
        for (size_t i = 0; i < cls.size(); ++i) table += (i ? "," : "") + cls[i].get_str();
        table += ")";
    }
    table += "\n";
    return table;
}

int cmd_classify(const GlobalOpts& g, bool rank4, long bound, long coeff_bound,
                 const std::string& primes_arg, double budget, long max_order) {
    PipelineConfig cfg;
    cfg.coeff_bound = coeff_bound;
    cfg.primes = parse_primes_arg(primes_arg);
    cfg.budget = budget;
    cfg.max_order = max_order;
    cfg.workers = g.workers;
    PipelineResult res = rank4 ? classify_rank4_pipeline(bound, coeff_bound, cfg)
                               : classify_rank3_pipeline(bound, coeff_bound, cfg);
    ojson config = base_config(g);
    config["bound"] = bound;
    config["coeff_bound"] = coeff_bound;
    config["primes"] = cfg.primes;
    config["budget"] = std::to_string(budget);
    config["max_order"] = max_order;
    emit_report(g, rank4 ? "classify rank4" : "classify rank3", config,
                ojson::array({pipeline_to_json(res)}), pipeline_table(res));
    return 0;
}

// -------------------------------------------------------------------- ring

int cmd_ring_verify(const GlobalOpts& g, const std::string& file) {
    BasedRing r = cli_load_ring(file, true);
    AxiomCheck check = r.verify_axioms();
    ojson entry;
    entry["file"] = file;
    entry["rank"] = r.rank();
    entry["ok"] = check.ok;
    if (!check.ok) {
        entry["axiom"] = check.axiom;
        entry["witness"] = check.witness;
    }
    std::string table = check.ok
                            ? "rank " + std::to_string(r.rank()) + " ring: axioms PASS\n"
                            : "axiom '" + check.axiom + "' FAILS: " + check.witness + "\n";
    ojson config = base_config(g);
    config["file"] = file;
    emit_report(g, "ring verify", config, ojson::array({entry}), table);
    return check.ok ? 0 : 1;
}

int cmd_ring_fpdim(const GlobalOpts& g, const std::string& file, bool skip_verify) {
    BasedRing r = cli_load_ring(file, skip_verify);
    ojson dims = ojson::array();
    std::string table;
    for (int i = 0; i < r.rank(); ++i) {
        FPDim d = fpdim(r, i);
        Poly mp = fpdim_min_poly(r, i);
        ojson e;
        e["label"] = r.label(i);
        e["interval"] = ojson::array({d.interval.lo().get_str(), d.interval.hi().get_str()});
        if (d.exact)
            e["exact"] = d.exact->get_str();
        else
            e["exact"] = nullptr;
        e["min_poly"] = mp.to_string();
        dims.push_back(std::move(e));
        table += "fpdim(" + r.label(i) + "): " +
                 (d.exact ? d.exact->get_str()
                          : "in [" + d.interval.lo().get_str() + ", " +
                                d.interval.hi().get_str() + "]") +
                 ", min poly " + mp.to_string() + "\n";
    }
    TotalDimExact te = total_fpdim_perron(r);
    ojson total;
    total["interval"] =
        ojson::array({te.perron.interval.lo().get_str(), te.perron.interval.hi().get_str()});
    if (te.perron.exact)
        total["exact"] = te.perron.exact->get_str();
    else
        total["exact"] = nullptr;
    total["min_poly"] = te.min_poly.to_string();
    table += "total: " +
             (te.perron.exact ? te.perron.exact->get_str()
                              : "in [" + te.perron.interval.lo().get_str() + ", " +
                                    te.perron.interval.hi().get_str() + "]") +
             ", min poly " + te.min_poly.to_string() + "\n";
    ojson entry;
    entry["file"] = file;
    entry["dims"] = std::move(dims);
    entry["total"] = std::move(total);
    ojson config = base_config(g);
    config["file"] = file;
    config["skip_verify"] = skip_verify;
    emit_report(g, "ring fpdim", config, ojson::array({entry}), table);
    return 0;
}

int cmd_ring_decomposition(const GlobalOpts& g, const std::string& file, bool skip_verify) {
    BasedRing r = cli_load_ring(file, skip_verify);
    std::vector<int> dec = decomposition_type(r);
    ojson entry;
    entry["file"] = file;
    entry["decomposition"] = dec;
    std::string table = "decomposition type: {";
    for (size_t i = 0; i < dec.size(); ++i) table += (i ? ", " : "") + std::to_string(dec[i]);
    table += "}\n";
    ojson config = base_config(g);
    config["file"] = file;
    config["skip_verify"] = skip_verify;
    emit_report(g, "ring decomposition", config, ojson::array({entry}), table);
    return 0;
}

ojson candidate_json(const BasedRing& r, const CandidateProfile& prof) {
    ojson c;
    c["matrix"] = imat_json(prof.matrix);
    ojson sym;
    for (const NamedCoefficient& s : generic_adams_symbols(r, prof.matrix))
        sym[s.name] = s.value.get_si();
    c["symbols"] = std::move(sym);
    c["is_identity"] = prof.is_identity;
    c["invertible"] = prof.invertible;
    if (prof.order)
        c["order"] = *prof.order;
    else
        c["order"] = nullptr;
    c["image_rank"] = prof.image_rank;
    c["power_relations"] = prof.power_relations;
    c["eliminated"] = prof.eliminated;
    c["elimination_reason"] = prof.elimination_reason;
    c["super_tannakian_only"] = prof.super_tannakian_only;
    c["categorical_note"] = prof.categorical_note;
    return c;
}

int cmd_ring_adams_search(const GlobalOpts& g, const std::string& file, bool skip_verify,
                          long coeff_bound, long max_order, double budget) {
    BasedRing r = cli_load_ring(file, skip_verify);
    std::vector<IMat> cands = adams_candidate_search(r, coeff_bound, budget);
    ojson jcands = ojson::array();
    std::string table =
        std::to_string(cands.size()) + " candidate(s) at coefficient bound " +
        std::to_string(coeff_bound) + "\n";
    for (const IMat& m : cands) {
        CandidateProfile prof = classify_candidate(r, m, max_order);
        jcands.push_back(candidate_json(r, prof));
        std::string line = "  ";
        for (int j = 0; j < r.rank(); ++j) {
            if (j == r.unit()) continue;
            Vec img(r.rank());
            for (int i = 0; i < r.rank(); ++i) img[i] = m.at(i, j);
            line += "psi(" + r.label(j) + ") = " + combo_string(img, r.labels()) + "; ";
        }
        line += prof.eliminated ? "eliminated: " + prof.elimination_reason : "viable";
        if (prof.order) line += " (order " + std::to_string(*prof.order) + ")";
        table += line + "\n";
    }
    ojson entry;
    entry["file"] = file;
    entry["count"] = cands.size();
    entry["candidates"] = std::move(jcands);
    ojson config = base_config(g);
    config["file"] = file;
    config["skip_verify"] = skip_verify;
    config["coeff_bound"] = coeff_bound;
    config["max_order"] = max_order;
    config["budget"] = std::to_string(budget);
    emit_report(g, "ring adams-search", config, ojson::array({entry}), table);
    return 0;
}

int cmd_ring_obstruct(const GlobalOpts& g, const std::string& file, bool skip_verify,
                      long coeff_bound, const std::string& primes_arg, long max_order,
                      double budget) {
    BasedRing r = cli_load_ring(file, skip_verify);
    PipelineConfig cfg;
    cfg.coeff_bound = coeff_bound;
    cfg.primes = parse_primes_arg(primes_arg);
    cfg.budget = budget;
    cfg.max_order = max_order;
    ObstructionReport rep = obstruct_ring(r, cfg);
    std::string table = "status: " + rep.status;
    if (!rep.known_name.empty()) table += " [" + rep.known_name + "]";
    if (!rep.elimination_reason.empty()) table += "\nreason: " + rep.elimination_reason;
    table += "\nviable Adams candidates: " + std::to_string(rep.adams.viable_count) + "/" +
             std::to_string(rep.adams.count);
    table += "\ndimension field passes at:";
    if (rep.field.pass_primes.empty()) table += " no tested prime";
    for (long p : rep.field.pass_primes) table += " " + std::to_string(p);
    if (!rep.total_dim.note.empty()) table += "\nnote: " + rep.total_dim.note;
    table += "\n";
    ojson config = base_config(g);
    config["file"] = file;
    config["skip_verify"] = skip_verify;
    config["coeff_bound"] = coeff_bound;
    config["primes"] = cfg.primes;
    config["max_order"] = max_order;
    config["budget"] = std::to_string(budget);
    emit_report(g, "ring obstruct", config, ojson::array({report_to_json(rep)}), table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for Grothendieck rings of symmetric fusion categories"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("-o,--output", g.output, "write the report to this path");
    app.add_option("--workers", g.workers, "worker threads for enumeration pipelines")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int exit_code = 0;

    // verlinde
    auto* verlinde = app.add_subcommand("verlinde", "Verlinde ring constructions and checks");
    verlinde->require_subcommand(1);
    {
        auto* build = verlinde->add_subcommand("build", "emit a ring file");
        auto p = std::make_shared<long>(0);
        auto plus = std::make_shared<bool>(false);
        build->add_option("--p", *p, "prime >= 5")->required();
        build->add_flag("--plus", *plus, "odd-index subring");
        build->callback([&, p, plus] { exit_code = cmd_verlinde_build(g, *p, *plus); });

        auto* verify = verlinde->add_subcommand("verify", "run the Verlinde check battery");
        auto vp = std::make_shared<long>(0);
        auto vprimes = std::make_shared<std::string>();
        verify->add_option("--p", *vp, "single prime >= 5");
        verify->add_option("--primes", *vprimes, "prime list: \"5..31\" or \"5,7,11\"");
        verify->callback([&, vp, vprimes] {
            std::vector<long> primes;
            if (!vprimes->empty())
                primes = parse_primes_arg(*vprimes);
            else if (*vp != 0)
                primes = {*vp};
            else
                throw kring::InvalidInput("verlinde verify: need --p or --primes");
            for (long q : primes) kring::require_verlinde_prime(q);
            exit_code = cmd_verlinde_verify(g, primes);
        });

        auto* adams = verlinde->add_subcommand("adams", "second Adams operation matrix");
        auto ap = std::make_shared<long>(0);
        auto aplus = std::make_shared<bool>(false);
        adams->add_option("--p", *ap, "prime >= 5")->required();
        adams->add_flag("--plus", *aplus, "odd-index subring");
        adams->callback([&, ap, aplus] { exit_code = cmd_verlinde_adams(g, *ap, *aplus); });

        auto* fp = verlinde->add_subcommand("fixed-points",
                                            "nonnegative Adams fixed points up to a bound");
        auto fpp = std::make_shared<long>(0);
        auto fpb = std::make_shared<long>(3);
        auto fpbudget = std::make_shared<double>(1e8);
        fp->add_option("--p", *fpp, "prime >= 5")->required();
        fp->add_option("--bound", *fpb, "coefficient bound")->capture_default_str();
        fp->add_option("--budget", *fpbudget, "scan budget")->capture_default_str();
        fp->callback(
            [&, fpp, fpb, fpbudget] { exit_code = cmd_verlinde_fixed_points(g, *fpp, *fpb, *fpbudget); });
    }

    // galois
    auto* galois = app.add_subcommand("galois", "Galois orbit and subfield analysis");
    galois->require_subcommand(1);
    {
        auto* orbits = galois->add_subcommand("orbits", "orbit partition of a subgroup");
        auto op = std::make_shared<long>(0);
        auto om = std::make_shared<long>(0);
        orbits->add_option("--p", *op, "prime >= 5")->required();
        orbits->add_option("--m", *om, "subgroup order dividing (p-1)/2")->required();
        orbits->callback([&, op, om] { exit_code = cmd_galois_orbits(g, *op, *om); });

        auto* rb = galois->add_subcommand("rank-bound",
                                          "positivity cone dimensions for proper subfields");
        auto rp = std::make_shared<long>(0);
        rb->add_option("--p", *rp, "prime >= 5")->required();
        rb->callback([&, rp] { exit_code = cmd_galois_rank_bound(g, *rp); });

        auto* embed = galois->add_subcommand("embed",
                                             "cyclotomic embedding and Adams compatibility");
        auto ep = std::make_shared<long>(0);
        embed->add_option("--p", *ep, "prime >= 5")->required();
        embed->callback([&, ep] { exit_code = cmd_galois_embed(g, *ep); });
    }

    // classify
    auto* classify = app.add_subcommand("classify", "bounded fusion-ring classification");
    classify->require_subcommand(1);
    for (bool rank4 : {false, true}) {
        auto* sub = classify->add_subcommand(rank4 ? "rank4" : "rank3",
                                             rank4 ? "rank-4 two-self-dual family"
                                                   : "rank-3 self-dual family");
        auto bound = std::make_shared<long>(0);
        auto cb = std::make_shared<long>(rank4 ? 1 : 2);
        auto primes = std::make_shared<std::string>("5..100");
        auto budget = std::make_shared<double>(1e8);
        auto max_order = std::make_shared<long>(24);
        sub->add_option("--bound", *bound, "structure constant bound")->required();
        sub->add_option("--coeff-bound", *cb, "Adams coefficient bound")->capture_default_str();
        sub->add_option("--primes", *primes, "obstruction primes")->capture_default_str();
        sub->add_option("--budget", *budget, "search budget")->capture_default_str();
        sub->add_option("--max-order", *max_order, "endomorphism order cap")
            ->capture_default_str();
        sub->callback([&, rank4, bound, cb, primes, budget, max_order] {
            exit_code = cmd_classify(g, rank4, *bound, *cb, *primes, *budget, *max_order);
        });
    }

    // ring
    auto* ring = app.add_subcommand("ring", "operations on a ring file");
    ring->require_subcommand(1);
    {
        auto* verify = ring->add_subcommand("verify", "check the based-ring axioms");
        auto file = std::make_shared<std::string>();
        verify->add_option("file", *file, "ring JSON file")->required();
        verify->callback([&, file] { exit_code = cmd_ring_verify(g, *file); });

        auto* fpd = ring->add_subcommand("fpdim", "Frobenius-Perron dimensions");
        auto ffile = std::make_shared<std::string>();
        auto fskip = std::make_shared<bool>(false);
        fpd->add_option("file", *ffile, "ring JSON file")->required();
        fpd->add_flag("--skip-verify", *fskip, "skip the axiom check on load");
        fpd->callback([&, ffile, fskip] { exit_code = cmd_ring_fpdim(g, *ffile, *fskip); });

        auto* dec = ring->add_subcommand("decomposition", "field degrees of the dimensions");
        auto dfile = std::make_shared<std::string>();
        auto dskip = std::make_shared<bool>(false);
        dec->add_option("file", *dfile, "ring JSON file")->required();
        dec->add_flag("--skip-verify", *dskip, "skip the axiom check on load");
        dec->callback(
            [&, dfile, dskip] { exit_code = cmd_ring_decomposition(g, *dfile, *dskip); });

        auto* as = ring->add_subcommand("adams-search", "bounded second-Adams candidates");
        auto afile = std::make_shared<std::string>();
        auto askip = std::make_shared<bool>(false);
        auto acb = std::make_shared<long>(2);
        auto amax = std::make_shared<long>(24);
        auto abudget = std::make_shared<double>(1e8);
        as->add_option("file", *afile, "ring JSON file")->required();
        as->add_flag("--skip-verify", *askip, "skip the axiom check on load");
        as->add_option("--coeff-bound", *acb, "coefficient bound")->capture_default_str();
        as->add_option("--max-order", *amax, "endomorphism order cap")->capture_default_str();
        as->add_option("--budget", *abudget, "search budget")->capture_default_str();
        as->callback([&, afile, askip, acb, amax, abudget] {
            exit_code = cmd_ring_adams_search(g, *afile, *askip, *acb, *amax, *abudget);
        });

        auto* ob = ring->add_subcommand("obstruct", "full obstruction report");
        auto ofile = std::make_shared<std::string>();
        auto oskip = std::make_shared<bool>(false);
        auto ocb = std::make_shared<long>(2);
        auto oprimes = std::make_shared<std::string>("5..100");
        auto omax = std::make_shared<long>(24);
        auto obudget = std::make_shared<double>(1e8);
        ob->add_option("file", *ofile, "ring JSON file")->required();
        ob->add_flag("--skip-verify", *oskip, "skip the axiom check on load");
        ob->add_option("--coeff-bound", *ocb, "Adams coefficient bound")->capture_default_str();
        ob->add_option("--primes", *oprimes, "obstruction primes")->capture_default_str();
        ob->add_option("--max-order", *omax, "endomorphism order cap")->capture_default_str();
        ob->add_option("--budget", *obudget, "search budget")->capture_default_str();
        ob->callback([&, ofile, oskip, ocb, oprimes, omax, obudget] {
            exit_code = cmd_ring_obstruct(g, *ofile, *oskip, *ocb, *oprimes, *omax, *obudget);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const kring::BudgetExceeded& e) {
        std::cerr << "budget refused: " << e.what() << "\n";
        return 3;
    } catch (const LoadVerifyError& e) {
        std::cerr << "verification failure: " << e.message << "\n";
        return 1;
    } catch (const kring::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kring::Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kring::Error& e) {
        std::cerr << "internal check failure: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
