#include "entdepth/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace entdepth {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw std::runtime_error("schema: " + what);
}

Partition parts_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) schema_error("parts must be a nonempty array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) schema_error("parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

}  // namespace

Ensemble ensemble_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("members")) {
        schema_error("ensemble needs n and members");
    }
    int n = j.at("n").get<int>();
    std::vector<EnsembleMember> members;
    for (const auto& m : j.at("members")) {
        if (!m.contains("p") || !m.contains("parts")) {
            schema_error("ensemble member needs p and parts");
        }
        Partition p = parts_from_json(m.at("parts"));
        if (p.n() != n) schema_error("member parts must sum to n");
        members.push_back({m.at("p").get<double>(), std::move(p)});
    }
    return Ensemble(std::move(members));
}

nlohmann::json ensemble_to_json(const Ensemble& e) {
    nlohmann::json j;
    j["n"] = e.n();
    j["members"] = nlohmann::json::array();
    for (const auto& m : e.members()) {
        j["members"].push_back({{"p", m.weight}, {"parts", m.finest.parts()}});
    }
    return j;
}

ParsedState state_from_json(const nlohmann::json& j) {
    if (!j.contains("kind")) schema_error("state needs a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ghz_product") {
        Partition type = parts_from_json(j.at("parts"));
        ParsedState st{true,
                       type.n(),
                       std::make_shared<StateVector>(ghz_product_state(type)),
                       nullptr,
                       Ensemble({{1.0, type}})};
        return st;
    }
    if (kind == "mixture") {
        if (!j.contains("terms") || j.at("terms").empty()) {
            schema_error("mixture needs terms");
        }
        std::vector<std::pair<double, DensityMatrix>> terms;
        std::vector<EnsembleMember> members;
        for (const auto& t : j.at("terms")) {
            if (!t.contains("w") || !t.contains("state")) {
                schema_error("mixture term needs w and state");
            }
            const auto& inner = t.at("state");
            if (inner.at("kind").get<std::string>() != "ghz_product") {
                schema_error("mixture terms must be ghz_product states");
            }
            Partition type = parts_from_json(inner.at("parts"));
            double w = t.at("w").get<double>();
            terms.emplace_back(
                w, DensityMatrix::pure(ghz_product_state(type)));
            members.push_back({w, std::move(type)});
        }
        ParsedState st{false,
                       terms.front().second.n(),
                       nullptr,
                       std::make_shared<DensityMatrix>(DensityMatrix::mix(terms)),
                       Ensemble(std::move(members))};
        return st;
    }
    schema_error("unknown state kind: " + kind);
}

std::string format_real(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_level(const GenFun& f, double k) {
    if (f.exact_integer) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(k));
        return buf;
    }
    return format_real(k);
}

namespace {

nlohmann::json level_json(const GenFun& f, double k) {
    if (f.exact_integer) return static_cast<long long>(k);
    return k;
}

}  // namespace

nlohmann::json bound_table_to_json(const BoundTable& t) {
    nlohmann::json j;
    j["f"] = t.f.name();
    j["n"] = t.n;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json witnesses = nlohmann::json::array();
        for (const auto& w : row.witnesses) witnesses.push_back(w.parts());
        j["rows"].push_back({{"k", level_json(t.f, row.k)},
                             {"b", row.b},
                             {"witnesses", witnesses}});
    }
    return j;
}

nlohmann::json usefulness_to_json(const UsefulnessReport& r) {
    nlohmann::json j;
    j["f"] = r.f.name();
    j["n"] = r.n;
    j["step_count"] = r.step_count;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"k", level_json(r.f, row.k)},
                             {"b", row.b},
                             {"strict", row.strict}});
    }
    return j;
}

nlohmann::json criterion_to_json(const CriterionReport& r) {
    return nlohmann::json{{"fq", r.fq},
                          {"depth", r.depth},
                          {"plain_bound", r.plain_bound},
                          {"plain_margin", r.plain_margin},
                          {"convex_bound", r.convex_bound},
                          {"convex_margin", r.convex_margin},
                          {"plain_ok", r.plain_ok},
                          {"convex_ok", r.convex_ok}};
}

std::string bound_table_to_csv(const BoundTable& t) {
    // Closed-form column when the family has one.
    ClosedBound closed{};
    bool has_closed = false, has_weak = false;
    switch (t.f.family) {
        case Family::width:
            closed = ClosedBound::prod;
            has_closed = has_weak = true;
            break;
        case Family::height:
            closed = ClosedBound::part;
            has_closed = true;
            break;
        case Family::rank:
            closed = ClosedBound::str;
            has_closed = true;
            break;
        case Family::toughness:
            closed = ClosedBound::tgh;
            has_closed = true;
            break;
        case Family::squareability:
            closed = ClosedBound::sq;
            has_closed = true;
            break;
        case Family::power_sum:
            if (t.f.q.kind == QKind::finite && t.f.q.value == 2.0) {
                closed = ClosedBound::sq;
                has_closed = true;
            }
            break;
        default: break;
    }

    UsefulnessReport use = usefulness_report(t);
    std::ostringstream os;
    os << "k,b";
    if (has_closed) os << ",closed";
    if (has_weak) os << ",weak";
    os << ",strict,witnesses\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        os << format_level(t.f, row.k) << ',' << row.b;
        if (has_closed) {
            os << ','
               << bound_closed(closed, static_cast<long long>(row.k), t.n);
        }
        if (has_weak) {
            os << ','
               << bound_closed(ClosedBound::prod_weak,
                               static_cast<long long>(row.k), t.n);
        }
        os << ',' << (use.rows[i].strict ? 1 : 0) << ',';
        for (size_t w = 0; w < row.witnesses.size(); ++w) {
            if (w) os << ';';
            os << row.witnesses[w].to_string();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace entdepth
