#include "rigidcert/jsonio.hpp"

#include <algorithm>

#include "rigidcert/errors.hpp"

namespace rigidcert {

std::string dump_canonical(const OJson& j) { return j.dump(2) + "\n"; }

OJson json_of(const Rational& x) { return x.to_string(); }

OJson json_of(const VecQ& v) {
    OJson a = OJson::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

OJson json_of(const RatMatrix& m) {
    OJson rows = OJson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        OJson row = OJson::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

OJson json_of(const Framework& f) {
    OJson j;
    j["dimension"] = f.config.dimension;
    if (f.partition) {
        auto u = f.partition->part_U;
        auto v = f.partition->part_V;
        std::sort(u.begin(), u.end());
        std::sort(v.begin(), v.end());
        j["parts"]["U"] = u;
        j["parts"]["V"] = v;
    }
    auto edges = f.graph.edges;
    std::sort(edges.begin(), edges.end());
    auto& je = j["edges"] = OJson::array();
    for (const auto& [a, b] : edges) je.push_back({a, b});
    auto& jc = j["coords"] = OJson::object();
    for (size_t i = 0; i < f.graph.vertex_count; ++i) {
        std::vector<std::string> row;
        row.reserve(f.config.dimension);
        for (const auto& x : f.config.points[i]) row.push_back(x.to_string());
        jc[std::to_string(i)] = row;
    }
    return j;
}

std::string framework_to_json(const Framework& f, int indent) {
    return json_of(f).dump(indent) + "\n";
}

Framework framework_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("framework JSON: ") + e.what());
    }
    try {
        Framework f;
        f.config.dimension = j.at("dimension").get<size_t>();
        if (j.contains("parts")) {
            BipartitePartition p;
            p.part_U = j.at("parts").at("U").get<std::vector<size_t>>();
            p.part_V = j.at("parts").at("V").get<std::vector<size_t>>();
            std::sort(p.part_U.begin(), p.part_U.end());
            std::sort(p.part_V.begin(), p.part_V.end());
            f.partition = std::move(p);
        }
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("framework JSON: bad edge");
            f.graph.edges.emplace_back(e[0].get<size_t>(), e[1].get<size_t>());
        }
        std::sort(f.graph.edges.begin(), f.graph.edges.end());
        const auto& jc = j.at("coords");
        f.graph.vertex_count = jc.size();
        f.config.points.resize(jc.size());
        for (const auto& [key, val] : jc.items()) {
            size_t id = 0;
            try {
                size_t pos = 0;
                id = std::stoull(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("framework JSON: vertex id '" + key + "' is not an integer");
            }
            if (id >= f.config.points.size())
                throw ParseError("framework JSON: vertex ids must be 0..n-1 with no gaps");
            VecQ pt;
            for (const auto& s : val) pt.push_back(Rational::from_string(s.get<std::string>()));
            f.config.points[id] = std::move(pt);
        }
        for (const auto& pt : f.config.points)
            if (pt.size() != f.config.dimension)
                throw ParseError("framework JSON: coordinate arity mismatch");
        validate_framework(f);
        return f;
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("framework JSON: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("framework JSON: ") + e.what());
    }
}

OJson json_of(const PsdReport& r) {
    OJson j;
    j["is_psd"] = r.is_psd;
    j["rank"] = r.rank;
    j["pivot_permutation"] = r.pivot_permutation;
    j["pivot_values"] = json_of(r.pivot_values);
    if (r.failure_witness) {
        j["failure_witness"] = json_of(*r.failure_witness);
        j["witness_value"] = r.witness_value.to_string();
    }
    return j;
}

OJson json_of(const ConicReport& r) {
    OJson j;
    j["conic_exists"] = r.conic_exists;
    j["direction_veronese_rank"] = r.direction_veronese_rank;
    j["max_rank"] = r.max_rank;
    if (r.witness_conic) j["witness_conic"] = json_of(*r.witness_conic);
    return j;
}

OJson json_of(const HullIntersectionReport& r) {
    OJson j;
    j["status"] = hull_status_name(r.status);
    if (r.status != HullStatus::DisjointStrictlySeparable) {
        j["t_star"] = r.t_star.to_string();
        j["weights_p"] = json_of(r.weights_p);
        j["weights_q"] = json_of(r.weights_q);
    }
    if (r.separating_quadric) j["separating_quadric"] = json_of(*r.separating_quadric);
    return j;
}

OJson json_of(const MaxwellAudit& a) {
    OJson j;
    j["m_edges"] = a.m_edges;
    j["r"] = a.r;
    j["s"] = a.s;
    j["f"] = a.f;
    j["d"] = a.d;
    j["trivial_motion_count"] = a.trivial_motion_count;
    j["identity_holds"] = a.identity_holds;
    j["rigid_count_holds"] = a.rigid_count_holds;
    return j;
}

OJson json_of(const RankReport& r) {
    OJson j;
    j["rank"] = r.rank;
    j["expected"] = r.expected;
    j["full_affine_span"] = r.full_affine_span;
    j["rigid"] = r.rigid;
    return j;
}

OJson json_of(const ConstructionAudit& a) {
    OJson j;
    j["core_superstable"] = a.core_superstable;
    j["general_position"] = a.general_position;
    j["stress_dim"] = a.stress_dim;
    j["stress_dim_expected"] = a.stress_dim_expected;
    j["bolker_roth_dim"] = a.bolker_roth_dim;
    j["inf_rigid"] = a.inf_rigid;
    j["veronese_full_span"] = a.veronese_full_span;
    j["retries_used"] = a.retries_used;
    j["universally_rigid_by_construction"] = a.universally_rigid_by_construction;
    return j;
}

OJson json_of(const Construction& c) {
    OJson j;
    j["seed"] = c.seed;
    j["framework"] = json_of(c.framework);
    j["audit"] = json_of(c.audit);
    return j;
}

OJson json_of(const SuperStabilityCertificate& c) {
    OJson j;
    j["verdict"] = c.verdict;
    j["dimension"] = c.dimension;
    j["vertex_count"] = c.vertex_count;
    j["span_dim"] = c.span_dim;
    j["stress"] = json_of(c.stress);
    j["stress_matrix_rank"] = c.stress_matrix_rank;
    j["psd"] = json_of(c.psd);
    j["conic"] = json_of(c.conic);
    return j;
}

OJson json_of(const GgrReport& r) {
    OJson j;
    j["d"] = r.d;
    j["m"] = r.m;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["framework"] = json_of(r.framework);
    j["audit"] = json_of(r.audit);
    j["core_certificate"] = json_of(r.core_certificate);
    auto& claims = j["claims"] = OJson::array();
    for (const auto& c : r.claims) {
        OJson cj;
        cj["fact"] = c.fact;
        cj["basis"] = c.basis == ClaimBasis::Computed ? "COMPUTED" : "CITED_THEOREM";
        cj["holds"] = c.holds;
        claims.push_back(std::move(cj));
    }
    return j;
}

} // namespace rigidcert
