#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gop/guess.hpp"
#include "gop/pade.hpp"
#include "gop/parse.hpp"
#include "gop/series.hpp"
#include "gop/singular.hpp"
#include "gop/system.hpp"

namespace gop {

using Json = nlohmann::json;

/// 12 significant digits for floating CSV/JSON columns
inline std::string fmt12(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// --- systems ----------------------------------------------------------------

/// {"n": int, "matrix": [[rational-function strings]]}
inline MatRF matrix_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("matrix")) throw ParseError("system JSON needs n and matrix", 0);
    std::size_t n = j.at("n").get<std::size_t>();
    const Json& rows = j.at("matrix");
    if (n < 1 || rows.size() != n) throw ParseError("system matrix has wrong row count", 0);
    MatRF m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("system matrix has wrong column count", 0);
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = parse_ratfunc(rows[i][k].get<std::string>());
    }
    return m;
}

inline Json matrix_to_json(const MatRF& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(ratfunc_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.dim()}, {"matrix", std::move(rows)}};
}

inline Json galochkin_to_json(const GalochkinReport& rep) {
    Json qs = Json::array();
    for (const Int& q : rep.qs) qs.push_back(q.get_str());
    Json eps = Json::array();
    for (double e : rep.eps_estimates) eps.push_back(fmt12(e));
    Json geo = Json::array();
    for (double g : rep.geom_estimates) geo.push_back(fmt12(g));
    return Json{{"S", rep.S}, {"q_s", std::move(qs)}, {"eps_estimates", std::move(eps)},
                {"geom_estimates", std::move(geo)}};
}

/// columns s, q_s, eps_estimate, geom_estimate; q_s exact, eps empty for s = 1
inline std::string galochkin_to_csv(const GalochkinReport& rep) {
    std::string out = "s,q_s,eps_estimate,geom_estimate\n";
    for (std::size_t s = 1; s <= rep.S; ++s) {
        out += std::to_string(s) + "," + rep.qs[s - 1].get_str() + ",";
        if (s >= 2) out += fmt12(rep.eps_estimates[s - 2]);
        out += "," + fmt12(rep.geom_estimates[s - 1]) + "\n";
    }
    return out;
}

inline Json growth_to_json(const GrowthSummary& g) {
    return Json{{"flag", growth_flag_name(g.flag)},
                {"geom_sup", fmt12(g.geom_sup)},
                {"geom_slope", fmt12(g.geom_slope)},
                {"fact_slope", fmt12(g.fact_slope)},
                {"eps_last", fmt12(g.eps_last)}};
}

// --- series -----------------------------------------------------------------

/// JSON list of rational strings
inline Series series_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("series JSON must be a nonempty array", 0);
    std::vector<Rat> c;
    c.reserve(j.size());
    for (const Json& x : j) {
        Rat r(x.get<std::string>());
        r.canonicalize();
        c.push_back(std::move(r));
    }
    return Series(std::move(c));
}

inline Json series_to_json(const Series& f) {
    Json a = Json::array();
    for (const Rat& c : f.coeffs()) a.push_back(c.get_str());
    return a;
}

/// columns n, house, den, eps_house, eps_den; eps empty for n < 2
inline std::string profile_to_csv(const ArithmeticProfile& p) {
    std::string out = "n,house,den,eps_house,eps_den\n";
    for (std::size_t n = 0; n < p.houses.size(); ++n) {
        out += std::to_string(n) + "," + p.houses[n].get_str() + "," + p.dens[n].get_str() + ",";
        if (n >= 2) {
            out += fmt12(p.eps_house[n - 2]);
            out += ",";
            out += fmt12(p.eps_den[n - 2]);
        } else {
            out += ",";
        }
        out += "\n";
    }
    return out;
}

// --- singularities ----------------------------------------------------------

inline Json singularity_to_json(const SingularityReport& r) {
    Json j;
    j["point"] = r.point ? r.point->get_str() : "inf";
    j["kind"] = point_kind_name(r.kind);
    j["lambda"] = r.lambda ? Json(r.lambda->get_str()) : Json("-inf");
    Json ex = Json::array();
    for (const Rat& e : r.exponents) ex.push_back(e.get_str());
    j["exponents"] = std::move(ex);
    j["exponents_complete"] = r.exponents_complete;
    j["holomorphic_dim"] = r.holomorphic_solution_dim;
    return j;
}

inline Json fuchs_to_json(const FuchsSummary& s) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(singularity_to_json(r));
    return Json{{"reports", std::move(reports)},
                {"is_fuchsian", s.is_fuchsian},
                {"all_points_resolved", s.all_points_resolved}};
}

// --- Pade -------------------------------------------------------------------

inline Json pade_to_json(const PadeSolution& sol) {
    Json ps = Json::array();
    for (const Poly& p : sol.P) ps.push_back(poly_to_string(p));
    return Json{{"Q", poly_to_string(sol.Q)}, {"P", std::move(ps)}, {"contact", sol.contact}};
}

inline Json witness_to_json(const PadeWitness& w) {
    return Json{{"detR0", ratfunc_to_string(w.detR0)}, {"nonsingular", w.nonsingular}};
}

// --- guessing ---------------------------------------------------------------

inline Json guess_to_json(const GuessResult& g) {
    return Json{{"operator", diffop_to_string(g.op)},
                {"order", g.order},
                {"degree", g.degree},
                {"verified_to", g.verified_to}};
}

}  // namespace gop
