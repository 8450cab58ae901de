#include "semiq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "semiq/rectifying.hpp"

namespace semiq {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), p);
}

namespace {

std::string ambient_name(Ambient a) { return a == Ambient::R13 ? "R13" : "R24"; }

Ambient ambient_from(const std::string& s) {
    if (s == "R13") return Ambient::R13;
    if (s == "R24") return Ambient::R24;
    throw InvalidCurve("curve file: unknown space '" + s + "'");
}

} // namespace

json curve_to_json(const CurveSamples& curve) {
    json j;
    j["space"] = ambient_name(curve.sig.ambient);
    j["signature"] = {{"eps", curve.sig.eps}, {"ambient", ambient_name(curve.sig.ambient)}};
    j["param_kind"] = curve.param_kind == ParamKind::Raw ? "raw" : "pseudo_arclength";
    json samples = json::array();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Quat& q = curve.points[i];
        samples.push_back({{"u", curve.params[i]}, {"q", {q.q1, q.q2, q.q3, q.q4}}});
    }
    j["samples"] = std::move(samples);
    return j;
}

CurveSamples curve_from_json(const json& j) {
    CurveSamples c;
    try {
        const Ambient space = ambient_from(j.at("space").get<std::string>());
        c.sig.ambient = space;
        if (j.contains("signature")) {
            const auto& sig = j.at("signature");
            const auto eps = sig.at("eps").get<std::vector<int>>();
            if (eps.size() != 3) throw InvalidCurve("curve file: eps must have 3 entries");
            c.sig.eps = {eps[0], eps[1], eps[2]};
            if (ambient_from(sig.at("ambient").get<std::string>()) != space)
                throw InvalidCurve("curve file: space and signature.ambient disagree");
        }
        const std::string pk = j.at("param_kind").get<std::string>();
        if (pk == "raw")
            c.param_kind = ParamKind::Raw;
        else if (pk == "pseudo_arclength")
            c.param_kind = ParamKind::PseudoArcLength;
        else
            throw InvalidCurve("curve file: unknown param_kind '" + pk + "'");
        for (const auto& s : j.at("samples")) {
            c.params.push_back(s.at("u").get<double>());
            const auto q = s.at("q").get<std::vector<double>>();
            if (q.size() != 4) throw InvalidCurve("curve file: q must have 4 entries");
            c.points.push_back({q[0], q[1], q[2], q[3]});
        }
    } catch (const json::exception& e) {
        throw InvalidCurve(std::string("curve file: ") + e.what());
    }
    c.validate();
    if (c.sig.ambient == Ambient::R13 && !c.is_spatial(1e-9))
        throw InvalidCurve("curve file: R13 curves must be spatial (q4 = 0)");
    return c;
}

json report3_to_json(const RectifyingReport3& r) {
    json checks;
    checks["thm32_i"] = {{"c1", r.distance.c1},
                         {"c2", r.distance.c2},
                         {"residual", r.distance.residual},
                         {"pass", r.distance.pass}};
    checks["thm32_ii"] = {{"c", r.tangential.c},
                          {"residual", r.tangential.residual},
                          {"pass", r.tangential.pass}};
    checks["thm32_iii"] = {{"normal_length", r.normal.normal_length},
                           {"stddev", r.normal.stddev},
                           {"rho_relative_range", r.normal.rho_relative_range},
                           {"pass", r.normal.pass}};
    checks["thm32_iv"] = {{"mean", r.binormal.mean},
                          {"stddev", r.binormal.stddev},
                          {"min_abs_torsion", r.binormal.min_abs_torsion},
                          {"pass", r.binormal.pass}};
    checks["thm33"] = {{"c1", r.ratio.c1},
                       {"c2", r.ratio.c2},
                       {"residual", r.ratio.residual},
                       {"pass", r.ratio.pass}};
    json j;
    j["space"] = "R13";
    j["checks"] = std::move(checks);
    j["rectifying_defect_max"] = r.h_alpha_n1_max;
    j["normal_length"] = r.normal_length;
    j["verdict"] = r.verdict;
    return j;
}

json report4_to_json(const RectifyingReport4& r) {
    json checks;
    checks["thm42"] = {{"c", r.c_estimate}, {"max_residual", r.eq43_max}, {"pass", r.eq43_pass}};
    checks["thm44_i"] = {{"c1", r.distance.c1},
                         {"c2", r.distance.c2},
                         {"residual", r.distance.residual},
                         {"pass", r.distance.pass}};
    checks["thm44_ii"] = {{"c", r.tangential.c},
                          {"residual", r.tangential.residual},
                          {"pass", r.tangential.pass}};
    checks["thm44_iii"] = {{"normal_length", r.normal.normal_length},
                           {"stddev", r.normal.stddev},
                           {"rho_relative_range", r.normal.rho_relative_range},
                           {"pass", r.normal.pass}};
    checks["thm44_iv"] = {{"n2_residual", r.binormal.n2_residual},
                          {"n3_residual", r.binormal.n3_residual},
                          {"a_squared", r.binormal.a_squared},
                          {"a_squared_stddev", r.binormal.a_squared_stddev},
                          {"pass", r.binormal.pass}};
    json j;
    j["space"] = "R24";
    j["c_estimate"] = r.c_estimate;
    j["checks"] = std::move(checks);
    j["rectifying_defect_max"] = r.h_beta_n1_max;
    j["reconstruction_residual_max"] = r.reconstruction_residual_max;
    j["verdict"] = r.verdict;
    return j;
}

std::string plot3_csv(const CurveSamples& curve, const Frenet3Data& f) {
    std::ostringstream os;
    os << "s,rho2,h_alpha_t,h_alpha_n1,h_alpha_n2,ratio_r_over_k\n";
    for (std::size_t i = f.first; i <= f.last; ++i) {
        const Quat& a = curve.points[i];
        os << format_double(f.s[i]) << ',' << format_double(std::fabs(h_inner(a, a))) << ','
           << format_double(h_inner(a, f.t[i])) << ',' << format_double(h_inner(a, f.n1[i]))
           << ',' << format_double(h_inner(a, f.n2[i])) << ','
           << format_double(f.r[i] / f.k[i]) << '\n';
    }
    return os.str();
}

std::string plot4_csv(const CurveSamples& curve, const Frenet4Data& f, double c) {
    const Eq43Check e43 = check_eq43(f, c);
    const Coefficients4 co = compute_rectifying_coefficients_4d(f, c);
    // eq43 is the innermost of the nested retained ranges
    const std::size_t off = e43.first - co.first;
    std::ostringstream os;
    os << "s,eq43,lambda,mu,nu,h_beta_N2,h_beta_N3\n";
    for (std::size_t j = 0; j < e43.s.size(); ++j) {
        const std::size_t jc = j + off;
        const std::size_t i = e43.first + j;
        const Quat& b = curve.points[i];
        os << format_double(e43.s[j]) << ',' << format_double(e43.value[j]) << ','
           << format_double(co.lambda[jc]) << ',' << format_double(co.mu[jc]) << ','
           << format_double(co.nu[jc]) << ',' << format_double(h_inner(b, f.N2[i])) << ','
           << format_double(h_inner(b, f.N3[i])) << '\n';
    }
    return os.str();
}

std::string frenet3_csv(const Frenet3Data& f) {
    std::ostringstream os;
    os << "s,t1,t2,t3,n11,n12,n13,n21,n22,n23,k,r,eps_t,eps_n1,eps_n2\n";
    for (std::size_t i = f.first; i <= f.last; ++i) {
        os << format_double(f.s[i]);
        for (int c = 0; c < 3; ++c) os << ',' << format_double(f.t[i][c]);
        for (int c = 0; c < 3; ++c) os << ',' << format_double(f.n1[i][c]);
        for (int c = 0; c < 3; ++c) os << ',' << format_double(f.n2[i][c]);
        os << ',' << format_double(f.k[i]) << ',' << format_double(f.r[i]) << ',' << f.eps_t
           << ',' << f.eps_n1 << ',' << f.eps_n2 << '\n';
    }
    return os.str();
}

std::string frenet4_csv(const Frenet4Data& f) {
    std::ostringstream os;
    os << "s,T1,T2,T3,T4,N11,N12,N13,N14,N21,N22,N23,N24,N31,N32,N33,N34,"
          "kappa,k,bitorsion,eps_T,eps_N1,eps_n1,eps_n2\n";
    for (std::size_t i = f.first; i <= f.last; ++i) {
        os << format_double(f.s[i]);
        for (int c = 0; c < 4; ++c) os << ',' << format_double(f.T[i][c]);
        for (int c = 0; c < 4; ++c) os << ',' << format_double(f.N1[i][c]);
        for (int c = 0; c < 4; ++c) os << ',' << format_double(f.N2[i][c]);
        for (int c = 0; c < 4; ++c) os << ',' << format_double(f.N3[i][c]);
        os << ',' << format_double(f.kappa[i]) << ',' << format_double(f.k[i]) << ','
           << format_double(f.bitorsion[i]) << ',' << f.eps_T << ',' << f.eps_N1 << ','
           << f.eps_n1 << ',' << f.eps_n2 << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << contents;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace semiq
