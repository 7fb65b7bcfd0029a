#include "pellwall/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace pellwall {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const json& j) {
    return Rational(Integer(j.at("num").get<std::string>(), 10),
                    Integer(j.at("den").get<std::string>(), 10));
}

json qn_to_json(const QuadraticNumber& q) {
    if (!q.rad().fits_slong_p())
        throw std::invalid_argument("report: radicand too large for the JSON schema");
    return json{{"a", rational_to_json(q.a())},
                {"b", rational_to_json(q.b())},
                {"rad", q.rad().get_si()}};
}

QuadraticNumber qn_from_json(const json& j) {
    return QuadraticNumber(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                           Integer(j.at("rad").get<long>()));
}

json solution_to_json(const PellSolution& s) {
    return json{{"x", s.x.get_str()}, {"y", s.y.get_str()}};
}

PellSolution solution_from_json(const json& j, long d) {
    return PellSolution(Integer(j.at("x").get<std::string>(), 10),
                        Integer(j.at("y").get<std::string>(), 10), d);
}

json wall_to_json(const PellSolution& s, const Wall& w) {
    auto [p_quot, p_sub] = w.rational_endpoints();
    return json{{"solution", solution_to_json(s)},
                {"center_beta", rational_to_json(w.center_beta)},
                {"radius_sq", rational_to_json(w.radius_sq)},
                {"p_quot", rational_to_json(p_quot)},
                {"p_sub", rational_to_json(p_sub)}};
}

const char* shape_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::perfect_square: return "perfect-square";
        case ShapeKind::trivial: return "trivial";
        case ShapeKind::pell: return "pell";
    }
    throw std::logic_error("unreachable");
}

ShapeKind shape_from_name(const std::string& name) {
    if (name == "perfect-square") return ShapeKind::perfect_square;
    if (name == "trivial") return ShapeKind::trivial;
    if (name == "pell") return ShapeKind::pell;
    throw std::invalid_argument("unknown shape: " + name);
}

json piecewise_to_json(const PiecewisePolynomial& f) {
    json bps = json::array();
    for (const auto& b : f.breakpoints()) bps.push_back(qn_to_json(b));
    json pieces = json::array();
    for (const auto& p : f.pieces()) {
        pieces.push_back(json{{"a2", rational_to_json(p.a2)},
                              {"a1", rational_to_json(p.a1)},
                              {"a0", rational_to_json(p.a0)}});
    }
    return json{{"breakpoints", std::move(bps)}, {"pieces", std::move(pieces)}};
}

json candidate_to_json(const CrfCandidate& c) {
    json out{{"shape", shape_name(c.shape)},
             {"epsilon1", qn_to_json(epsilon1_of(c))},
             {"h0", piecewise_to_json(c.h0)},
             {"h1", piecewise_to_json(h1_of(c))}};
    if (c.solution) out["solution"] = solution_to_json(*c.solution);
    return out;
}

CrfCandidate candidate_from_json(const json& j, long d) {
    ShapeKind kind = shape_from_name(j.at("shape").get<std::string>());
    CrfCandidate c = kind == ShapeKind::pell
                         ? h0_pell_shape(d, solution_from_json(j.at("solution"), d))
                         : h0_square_shape(d);
    if (!(qn_from_json(j.at("epsilon1")) == epsilon1_of(c)))
        throw std::invalid_argument("report: candidate epsilon1 inconsistent with its shape");
    return c;
}

json verdict_to_json(const SyzygyVerdict& v) {
    json out{{"basepoint_free", to_string(v.basepoint_free)},
             {"projectively_normal", to_string(v.projectively_normal)},
             {"caveats", v.caveats}};
    if (v.np_guaranteed)
        out["np_guaranteed"] = *v.np_guaranteed;
    else
        out["np_guaranteed"] = nullptr;
    return out;
}

TriState tristate_from_name(const std::string& name) {
    if (name == "yes") return TriState::yes;
    if (name == "no") return TriState::no;
    if (name == "candidate-dependent") return TriState::candidate_dependent;
    throw std::invalid_argument("unknown tri-state: " + name);
}

SyzygyVerdict verdict_from_json(const json& j, long d) {
    SyzygyVerdict v;
    v.d = d;
    v.basepoint_free = tristate_from_name(j.at("basepoint_free").get<std::string>());
    v.projectively_normal = tristate_from_name(j.at("projectively_normal").get<std::string>());
    if (!j.at("np_guaranteed").is_null()) v.np_guaranteed = j.at("np_guaranteed").get<int>();
    v.caveats = j.at("caveats").get<std::vector<std::string>>();
    return v;
}

json certificate_to_json(const Prop41Certificate& c) {
    return json{{"solution", solution_to_json(c.solution)},
                {"dim_e1_00", c.dim_e1_00.get_str()},
                {"conditions_bound", c.conditions_bound.get_str()},
                {"dim_exceeds_conditions", c.dim_exceeds_conditions},
                {"orbit", json{{"size", c.orbits.orbit_size.get_str()},
                               {"count", c.orbits.orbit_count.get_str()},
                               {"transitive", c.orbits.transitive}}},
                {"h0_lower_bound", c.h0_lower_bound.get_str()}};
}

Prop41Certificate certificate_from_json(const json& j, long d) {
    const json& orbit = j.at("orbit");
    return Prop41Certificate{
        d,
        solution_from_json(j.at("solution"), d),
        Integer(j.at("dim_e1_00").get<std::string>(), 10),
        Integer(j.at("conditions_bound").get<std::string>(), 10),
        j.at("dim_exceeds_conditions").get<bool>(),
        OrbitStructure{Integer(orbit.at("size").get<std::string>(), 10),
                       Integer(orbit.at("count").get<std::string>(), 10),
                       orbit.at("transitive").get<bool>()},
        Integer(j.at("h0_lower_bound").get<std::string>(), 10)};
}

}  // namespace

bool operator==(const Report& a, const Report& b) {
    return a.d == b.d && a.perfect_square == b.perfect_square &&
           a.pell_minimal_solution == b.pell_minimal_solution &&
           a.pell_solutions_list == b.pell_solutions_list && a.walls == b.walls &&
           [&] {
               if (a.candidates.size() != b.candidates.size()) return false;
               for (std::size_t i = 0; i < a.candidates.size(); ++i) {
                   if (!(a.candidates[i].shape == b.candidates[i].shape &&
                         a.candidates[i].solution == b.candidates[i].solution &&
                         a.candidates[i].h0 == b.candidates[i].h0))
                       return false;
               }
               return true;
           }() &&
           a.verdict == b.verdict && a.excluded_chars == b.excluded_chars &&
           a.certificate.has_value() == b.certificate.has_value() &&
           (!a.certificate ||
            (a.certificate->solution == b.certificate->solution &&
             a.certificate->dim_e1_00 == b.certificate->dim_e1_00 &&
             a.certificate->conditions_bound == b.certificate->conditions_bound &&
             a.certificate->orbits == b.certificate->orbits &&
             a.certificate->h0_lower_bound == b.certificate->h0_lower_bound));
}

Report build_report(long d, int n_solutions) {
    if (d < 1) throw std::invalid_argument("build_report: d must be >= 1");
    Report r;
    r.d = d;
    r.perfect_square = is_perfect_square(Integer(d));
    if (!r.perfect_square) {
        r.pell_minimal_solution = pell_minimal(d);
        r.pell_solutions_list = pell_solutions(d, n_solutions);
        r.walls = enumerate_walls(d, n_solutions);
        r.excluded_chars = excluded_characteristics(d);
        r.certificate = prop41_certificate(d);
    }
    r.candidates = candidates(d, n_solutions, /*apply_char_narrowing=*/true);
    r.verdict = verdict(d);
    return r;
}

std::string report_to_json_string(const Report& r, int indent) {
    json out;
    out["d"] = r.d;
    out["perfect_square"] = r.perfect_square;
    if (r.pell_minimal_solution) {
        json sols = json::array();
        for (const auto& s : r.pell_solutions_list) sols.push_back(solution_to_json(s));
        out["pell"] = json{{"minimal", solution_to_json(*r.pell_minimal_solution)},
                           {"solutions", std::move(sols)}};
    } else {
        out["pell"] = nullptr;
    }
    json walls = json::array();
    for (const auto& [s, w] : r.walls) walls.push_back(wall_to_json(s, w));
    out["walls"] = std::move(walls);
    json cands = json::array();
    for (const auto& c : r.candidates) cands.push_back(candidate_to_json(c));
    out["candidates"] = std::move(cands);
    out["verdict"] = verdict_to_json(r.verdict);
    out["theta_certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
    json chars = json::array();
    for (const auto& p : r.excluded_chars) chars.push_back(p.get_str());
    out["excluded_characteristics"] = std::move(chars);
    return out.dump(indent) + "\n";
}

Report report_from_json_string(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.d = j.at("d").get<long>();
    r.perfect_square = j.at("perfect_square").get<bool>();
    if (!j.at("pell").is_null()) {
        r.pell_minimal_solution = solution_from_json(j.at("pell").at("minimal"), r.d);
        for (const auto& s : j.at("pell").at("solutions"))
            r.pell_solutions_list.push_back(solution_from_json(s, r.d));
    }
    for (const auto& w : j.at("walls")) {
        r.walls.emplace_back(solution_from_json(w.at("solution"), r.d),
                             Wall(rational_from_json(w.at("center_beta")),
                                  rational_from_json(w.at("radius_sq"))));
        auto [p_quot, p_sub] = r.walls.back().second.rational_endpoints();
        if (!(p_quot == rational_from_json(w.at("p_quot"))) ||
            !(p_sub == rational_from_json(w.at("p_sub"))))
            throw std::invalid_argument("report: wall endpoints inconsistent with center/radius");
    }
    for (const auto& c : j.at("candidates")) r.candidates.push_back(candidate_from_json(c, r.d));
    r.verdict = verdict_from_json(j.at("verdict"), r.d);
    if (!j.at("theta_certificate").is_null())
        r.certificate = certificate_from_json(j.at("theta_certificate"), r.d);
    for (const auto& p : j.at("excluded_characteristics"))
        r.excluded_chars.emplace_back(p.get<std::string>(), 10);
    return r;
}

std::string report_to_table(const Report& r) {
    std::ostringstream os;
    os << "d = " << r.d << (r.perfect_square ? " (perfect square)\n" : "\n");
    if (r.pell_minimal_solution) {
        os << "pell minimal: " << *r.pell_minimal_solution << "\n";
        os << "pell solutions:";
        for (const auto& s : r.pell_solutions_list) os << " " << s;
        os << "\n";
    } else {
        os << "pell: only trivial solutions\n";
    }
    if (!r.walls.empty()) {
        os << "walls (largest first):\n";
        for (const auto& [s, w] : r.walls) {
            auto [pq, ps] = w.rational_endpoints();
            os << "  " << s << "  center " << w.center_beta.str() << "  radius^2 "
               << w.radius_sq.str() << "  endpoints (" << pq.str() << ", " << ps.str() << ")\n";
        }
    }
    os << "candidates:\n";
    for (const auto& c : r.candidates) {
        os << "  " << shape_name(c.shape);
        if (c.solution) os << " " << *c.solution;
        os << "  epsilon1 = " << epsilon1_of(c).str() << " ~ " << epsilon1_of(c).decimal()
           << "\n";
    }
    os << "verdict: basepoint_free = " << to_string(r.verdict.basepoint_free)
       << ", projectively_normal = " << to_string(r.verdict.projectively_normal);
    if (r.verdict.np_guaranteed)
        os << ", N_p up to p = " << *r.verdict.np_guaranteed;
    else
        os << ", N_p (p >= 1) not guaranteed";
    os << "\n";
    for (const auto& c : r.verdict.caveats) os << "  caveat: " << c << "\n";
    if (r.certificate) {
        os << "theta certificate: dim E^1_(0,0) = " << r.certificate->dim_e1_00.get_str()
           << " > conditions <= " << r.certificate->conditions_bound.get_str()
           << ", h^0 >= " << r.certificate->h0_lower_bound.get_str() << "\n";
    }
    if (!r.excluded_chars.empty()) {
        os << "excluded characteristics:";
        for (const auto& p : r.excluded_chars) os << " " << p.get_str();
        os << "\n";
    }
    return os.str();
}

std::string walls_to_csv(long d, int n_solutions) {
    std::ostringstream os;
    os << "solution_x,solution_y,center_beta,center_beta_dec,radius_sq,radius_dec,"
          "p_quot,p_quot_dec,p_sub,p_sub_dec\n";
    if (n_solutions <= 0) return os.str();  // empty request: header only
    for (const auto& [s, w] : enumerate_walls(d, n_solutions)) {
        auto [pq, ps] = w.rational_endpoints();
        QuadraticNumber radius =
            QuadraticNumber::sqrt_multiple(Rational(1, w.radius_sq.den()),
                                           w.radius_sq.num() * w.radius_sq.den());
        os << s.x.get_str() << "," << s.y.get_str() << "," << w.center_beta.str() << ","
           << w.center_beta.decimal() << "," << w.radius_sq.str() << "," << radius.decimal()
           << "," << pq.str() << "," << pq.decimal() << "," << ps.str() << "," << ps.decimal()
           << "\n";
    }
    QuadraticNumber accumulation =
        QuadraticNumber::sqrt_multiple(Rational(-1, Integer(d)), Integer(d));
    os << "accumulation,," << accumulation.str() << "," << accumulation.decimal() << ",0,0,"
       << accumulation.str() << "," << accumulation.decimal() << "," << accumulation.str() << ","
       << accumulation.decimal() << "\n";
    return os.str();
}

std::string plot_to_csv(const CrfCandidate& c, const Rational& xmax, int samples) {
    if (samples < 1) throw std::invalid_argument("plot_to_csv: samples must be >= 1");
    if (xmax.sign() <= 0) throw std::invalid_argument("plot_to_csv: xmax must be positive");
    PiecewisePolynomial h1 = h1_of(c);
    std::ostringstream os;
    os << "x,x_dec,h0,h0_dec,h1,h1_dec\n";
    for (int i = 0; i <= samples; ++i) {
        Rational x = xmax * Rational(Integer(i), Integer(samples));
        Rational h0_val = c.h0.eval(x);
        Rational h1_val = h1.eval(x);
        os << x.str() << "," << x.decimal() << "," << h0_val.str() << "," << h0_val.decimal()
           << "," << h1_val.str() << "," << h1_val.decimal() << "\n";
    }
    return os.str();
}

}  // namespace pellwall
