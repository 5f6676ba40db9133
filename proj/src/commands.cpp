#include "entdepth/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "entdepth/bounds.hpp"
#include "entdepth/classify.hpp"
#include "entdepth/genfun.hpp"
#include "entdepth/io.hpp"
#include "entdepth/partition.hpp"
#include "entdepth/qstate.hpp"
#include "entdepth/verify.hpp"

namespace entdepth::cli {

namespace {

int write_output(const std::string& path, const std::string& payload,
                 std::ostream& diag) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return kOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        diag << "cannot open output file: " << path << "\n";
        return kIo;
    }
    out << payload;
    return out ? kOk : kIo;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace

int cmd_partitions(const RunConfig& cfg, std::ostream& diag) {
    try {
        auto all = enumerate_partitions(cfg.n);
        std::ostringstream os;
        if (cfg.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const Partition& p : all) {
                j.push_back({{"parts", p.parts()},
                             {"h", p.height()},
                             {"w", p.width()},
                             {"r", p.rank()},
                             {"t", p.min_part()},
                             {"s2", p.square_sum()}});
            }
            os << j.dump(2) << "\n";
        } else {
            os << "parts,h,w,r,t,s2\n";
            for (const Partition& p : all) {
                os << p.to_string() << ',' << p.height() << ',' << p.width()
                   << ',' << p.rank() << ',' << p.min_part() << ','
                   << p.square_sum() << '\n';
            }
        }
        return write_output(cfg.output, os.str(), diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_hasse(const RunConfig& cfg, const std::string& order,
              std::ostream& diag) {
    try {
        OrderKind kind;
        if (order == "refinement") {
            kind = OrderKind::refinement;
        } else if (order == "dominance") {
            kind = OrderKind::dominance;
        } else {
            diag << "unknown order: " << order << "\n";
            return kUsage;
        }
        HasseGraph g = hasse_graph(cfg.n, kind);
        std::string payload;
        if (cfg.format == "dot") {
            payload = hasse_to_dot(g);
        } else if (cfg.format == "json") {
            payload = hasse_to_json(g);
        } else {
            diag << "unsupported format for hasse: " << cfg.format << "\n";
            return kUsage;
        }
        return write_output(cfg.output, payload, diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_genfun_table(const RunConfig& cfg, std::ostream& diag) {
    try {
        GenFun f = parse_genfun(cfg.genfun, cfg.n);
        std::ostringstream os;
        if (cfg.format == "json") {
            nlohmann::json j;
            j["f"] = f.name();
            j["n"] = cfg.n;
            j["rows"] = nlohmann::json::array();
            for (const Partition& p : enumerate_partitions(cfg.n)) {
                j["rows"].push_back(
                    {{"parts", p.parts()},
                     {"f_value", evaluate(f, p)}});
            }
            os << j.dump(2) << "\n";
        } else {
            os << "parts,f_value\n";
            for (const Partition& p : enumerate_partitions(cfg.n)) {
                os << p.to_string() << ','
                   << format_level(f, evaluate(f, p)) << '\n';
            }
        }
        return write_output(cfg.output, os.str(), diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_bounds(const RunConfig& cfg, std::ostream& diag) {
    try {
        GenFun f = parse_genfun(cfg.genfun, cfg.n);
        BoundTable table = bound_curve(f, cfg.n, cfg.n_max_bruteforce);
        std::string payload = cfg.format == "json"
                                  ? bound_table_to_json(table).dump(2) + "\n"
                                  : bound_table_to_csv(table);
        return write_output(cfg.output, payload, diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_usefulness(const RunConfig& cfg, std::ostream& diag) {
    try {
        GenFun f = parse_genfun(cfg.genfun, cfg.n);
        UsefulnessReport rep =
            usefulness_report(f, cfg.n, cfg.n_max_bruteforce);
        return write_output(cfg.output, usefulness_to_json(rep).dump(2) + "\n",
                            diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_classify(const RunConfig& cfg, std::ostream& diag) {
    std::optional<Ensemble> parsed;
    try {
        parsed = ensemble_from_json(read_json_file(cfg.input));
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kIo;
    }
    try {
        const Ensemble& e = *parsed;
        GenFun f = parse_genfun(cfg.genfun, e.n());
        nlohmann::json out;
        out["f"] = f.name();
        out["n"] = e.n();
        out["ensemble_depth"] = ensemble_depth(f, e);
        out["ensemble_avg_depth"] = ensemble_avg_depth(f, e);
        out["ases"] = ases(e);
        out["members"] = nlohmann::json::array();
        for (const auto& m : e.members()) {
            ClassLabel label = class_of(f, m.finest);
            nlohmann::json member{{"p", m.weight},
                                  {"parts", m.finest.parts()},
                                  {"depth", label.k}};
            if (label.k_neighbor) {
                member["k_neighbor"] = *label.k_neighbor;
            }
            out["members"].push_back(std::move(member));
        }
        return write_output(cfg.output, out.dump(2) + "\n", diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_witness(const RunConfig& cfg, std::ostream& diag) {
    std::optional<ParsedState> parsed;
    try {
        parsed = state_from_json(read_json_file(cfg.input));
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kIo;
    }
    try {
        const ParsedState& st = *parsed;
        GenFun f = parse_genfun(cfg.genfun, st.n);
        CollectiveOp jz = CollectiveOp::jz(st.n);
        double fq = st.pure ? qfi_pure(*st.psi, jz) : qfi(*st.rho, jz);
        CriterionReport rep =
            verify_criterion(fq, f, st.certificate, cfg.n_max_bruteforce);
        nlohmann::json out = criterion_to_json(rep);
        out["f"] = f.name();
        out["n"] = st.n;
        // squared spectral width of the collective operator; dividing the
        // measured value by it gives the dimension-free normalized form
        out["normalization"] = jz.spectral_width() * jz.spectral_width();
        out["excluded"] = nlohmann::json::array();
        for (double k :
             criteria_exclude(f, st.n, fq, cfg.n_max_bruteforce)) {
            out["excluded"].push_back(f.exact_integer
                                          ? nlohmann::json(
                                                static_cast<long long>(k))
                                          : nlohmann::json(k));
        }
        return write_output(cfg.output, out.dump(2) + "\n", diag);
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int n_max,
               bool include_counterexamples, std::ostream& diag) {
    SuiteResult result;
    try {
        if (suite == "orders") {
            result = run_suite_orders(n_max);
        } else if (suite == "monotonicity") {
            result = run_suite_monotonicity(n_max, include_counterexamples);
        } else if (suite == "limits") {
            result = run_suite_limits();
        } else if (suite == "bounds") {
            result = run_suite_bounds(n_max);
        } else if (suite == "qfi") {
            if (!cfg.seed) {
                diag << "the qfi suite requires --seed\n";
                return kUsage;
            }
            result = run_suite_qfi(n_max, *cfg.seed);
        } else {
            diag << "unknown suite: " << suite << "\n";
            return kUsage;
        }
    } catch (const std::exception& e) {
        diag << e.what() << "\n";
        return kUsage;
    }
    nlohmann::json out{{"suite", result.name},
                       {"n_max", n_max},
                       {"checks", result.checks},
                       {"violations", result.violations},
                       {"ok", result.ok()},
                       {"messages", result.messages}};
    int rc = write_output(cfg.output, out.dump(2) + "\n", diag);
    if (rc != kOk) return rc;
    return result.ok() ? kOk : kViolation;
}

}  // namespace entdepth::cli
