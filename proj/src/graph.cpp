#include "stereo/graph.hpp"

#include "stereo/geometry.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace stereo {

namespace {

/// Real boundary sweeps: every finite K element with sphere height <= B.
void sweep_sqrt2q(const Int& B, std::vector<KElement>& out) {
    // Class sqrt2 p / q, q odd: H = 2p^2 - 2pq + q^2 = p^2 + (p - q)^2.
    Int s = isqrt(B);
    for (Int p = -s; p <= s; ++p)
        for (Int q = p - s; q <= p + s; ++q) {
            if (q <= 0 || q % 2 == 0) continue;
            if (2 * p * p - 2 * p * q + q * q > B) continue;
            if (gcd(p < 0 ? Int(-p) : p, q) != 1) continue;
            out.push_back(KElement::from_sqrt2_multiple(Rational(p, q)));
        }
    // Class p / (sqrt2 q), p odd: H = p^2 - 2pq + 2q^2 = (p - q)^2 + q^2.
    for (Int q = 1; q <= s; ++q)
        for (Int p = q - s; p <= q + s; ++p) {
            if (p % 2 == 0) continue;
            if (p * p - 2 * p * q + 2 * q * q > B) continue;
            if (gcd(p < 0 ? Int(-p) : p, q) != 1) continue;
            out.push_back(KElement::from_sqrt2_multiple(Rational(p, 2 * q)));
        }
}

void sweep_q(const Int& B, std::vector<KElement>& out) {
    // H = p^2 - pq + q^2; 4H = (2p - q)^2 + 3 q^2.
    Int qmax = isqrt(4 * B / 3);
    for (Int q = 1; q <= qmax; ++q) {
        Int w = isqrt(4 * B - 3 * q * q);
        for (Int m = -w; m <= w; ++m) {
            if ((m - q) % 2 != 0) continue;      // m = 2p - q
            Int p = (m + q) / 2;
            if (p * p - p * q + q * q > B) continue;
            if (gcd(p < 0 ? Int(-p) : p, q) != 1) continue;
            out.push_back(KElement::from_rational(Rational(p, q)));
        }
    }
}

/// O_K elements with norm <= N, in the omega basis.
std::vector<OkInt> ok_ball(KCase field, const Int& N) {
    std::vector<OkInt> pts;
    Int s = isqrt(2 * N) + 1;
    for (Int a = -s; a <= s; ++a)
        for (Int b = -s; b <= s; ++b) {
            OkInt x{field, a, b};
            if (x.norm() <= N) pts.push_back(x);
        }
    return pts;
}

void sweep_imag(KCase field, SpaceCase space, const Int& B, std::vector<KElement>& out) {
    // Sphere height bounds |alpha|^2 + |beta|^2 by a case constant:
    // the subtracted linear term eats at most a fixed fraction of the sum.
    Int M = (space == SpaceCase::S2_I) ? 4 : (space == SpaceCase::S2_II) ? 8 : 3;
    Int N = M * B;
    std::vector<OkInt> pts = ok_ball(field, N);
    std::set<KElement> seen;
    for (const OkInt& beta : pts) {
        if (beta.is_zero()) continue;
        Int rest = N - beta.norm();
        for (const OkInt& alpha : pts) {
            if (alpha.norm() > rest) continue;
            if (gcd(alpha, beta).norm() != 1) continue;
            KElement z = KElement::reduce_imag_quadratic(alpha, beta);
            if (closed_form_height(z, space) > B) continue;
            if (seen.insert(z).second) out.push_back(z);
        }
    }
}

}  // namespace

std::vector<KElement> enumerate_boundary_elements(SpaceCase space, const Int& B) {
    if (B < 1) throw std::invalid_argument("enumerate_boundary_elements: bound must be >= 1");
    const SpaceSpec& spec = space_spec(space);
    std::vector<KElement> out;
    out.push_back(KElement::infinity(spec.boundary_field));
    switch (spec.boundary_field) {
        case KCase::Sqrt2Q: sweep_sqrt2q(B, out); break;
        case KCase::Q: sweep_q(B, out); break;
        default: sweep_imag(spec.boundary_field, space, B, out); break;
    }
    return out;
}

std::vector<SpherePoint> enumerate_sphere_points(SpaceCase space, const Int& bound) {
    std::vector<SpherePoint> nodes;
    for (const KElement& z : enumerate_boundary_elements(space, bound))
        nodes.push_back(map_to_sphere(z, space, /*allow_infinity=*/true));
    std::sort(nodes.begin(), nodes.end(), [](const SpherePoint& a, const SpherePoint& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.p < b.p;
    });
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

TangencyGraph tangency_graph(SpaceCase space, const Int& height_bound, unsigned threads) {
    TangencyGraph g;
    g.space = space;
    g.bound = height_bound;
    g.nodes = enumerate_sphere_points(space, height_bound);
    size_t n = g.nodes.size();
    if (threads == 0) threads = 1;
    std::vector<std::vector<std::pair<size_t, size_t>>> partial(threads);
    auto work = [&](unsigned t) {
        for (size_t i = t; i < n; i += threads)
            for (size_t j = i + 1; j < n; ++j)
                if (form_says_tangent(g.nodes[i], g.nodes[j])) partial[t].emplace_back(i, j);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& part : partial)
        g.edges.insert(g.edges.end(), part.begin(), part.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "dot") return GraphFormat::Dot;
    if (name == "json") return GraphFormat::Json;
    if (name == "svg-circles") return GraphFormat::SvgCircles;
    throw std::invalid_argument("unknown graph format: '" + name + "'");
}

namespace {

std::string node_id(const SpherePoint& P) {
    std::ostringstream out;
    for (const auto& x : P.p) out << "p" << x << "_";
    out << P.q;
    return out.str();
}

std::string export_dot(const TangencyGraph& g) {
    std::ostringstream out;
    out << "graph \"" << to_string(g.space) << "\" {\n";
    for (const auto& node : g.nodes)
        out << "  \"" << node_id(node) << "\" [label=\"" << node.str() << "\"];\n";
    for (const auto& [i, j] : g.edges)
        out << "  \"" << node_id(g.nodes[i]) << "\" -- \"" << node_id(g.nodes[j]) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const TangencyGraph& g) {
    std::ostringstream out;
    out << "{\"case\":\"" << to_string(g.space) << "\",\"bound\":" << g.bound << ",\"nodes\":[";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& node = g.nodes[i];
        out << (i ? "," : "") << "{\"p\":[";
        for (size_t k = 0; k < node.p.size(); ++k) out << (k ? "," : "") << node.p[k];
        out << "],\"q\":" << node.q << ",\"height\":" << node.q << "}";
    }
    out << "],\"edges\":[";
    for (size_t e = 0; e < g.edges.size(); ++e)
        out << (e ? "," : "") << "[" << g.edges[e].first << "," << g.edges[e].second << "]";
    out << "]}";
    return out.str();
}

/// Decimal rendering of a QuadReal, for drawing only.
std::string svg_num(const QuadReal& x) {
    RatInterval v = x.enclosure(160);
    return decimal_string((v.lo + v.hi) / 2, 30);
}

/// Planar coordinates of an ambient point: identity for the 2D circles,
/// orthonormal in-plane coordinates around the center for the circle in W.
std::pair<QuadReal, QuadReal> planar(const TangencyGraph& g, const RealVec& x) {
    if (g.space != SpaceCase::S1_III) return {x[0], x[1]};
    const SpaceSpec& spec = space_spec(g.space);
    RealVec d = sub(x, to_real(spec.center));
    // e1 = (1,-1,0)/sqrt2, e2 = (1,1,-2)/sqrt6.
    QuadReal u = (d[0] - d[1]) * (QuadReal::sqrt2() / QuadReal(2));
    QuadReal v = (d[0] + d[1] - QuadReal(2) * d[2]) * (QuadReal::sqrt6() / QuadReal(6));
    return {u, v};
}

std::string export_svg(const TangencyGraph& g) {
    if (!is_circle_case(g.space))
        throw std::invalid_argument("rendering only defined for 1-sphere cases");
    const SpaceSpec& spec = space_spec(g.space);
    auto [cx, cy] = planar(g, to_real(spec.center));
    std::ostringstream out;
    RatInterval renc = spec.R.enclosure(64);
    Rational pad = (renc.hi + 1) * 6 / 5;
    std::string span = decimal_string(2 * pad, 30);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"" << decimal_string(-pad, 30) << " " << decimal_string(-pad, 30) << " "
        << span << " " << span << "\">\n"
        << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\">\n";
    out << "<circle cx=\"" << svg_num(cx) << "\" cy=\"" << svg_num(cy) << "\" r=\""
        << svg_num(spec.R) << "\"/>\n";
    for (const auto& node : g.nodes) {
        Horoball ball = horoball_at(node);
        auto [x, y] = planar(g, ball.center);
        out << "<circle cx=\"" << svg_num(x) << "\" cy=\"" << svg_num(y) << "\" r=\""
            << svg_num(ball.radius) << "\" stroke=\"steelblue\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace

std::string export_graph(const TangencyGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Dot: return export_dot(g);
        case GraphFormat::Json: return export_json(g);
        case GraphFormat::SvgCircles: return export_svg(g);
    }
    throw std::logic_error("unreachable");
}

TangencyGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TangencyGraph g;
    g.space = parse_space_case(j.at("case").get<std::string>());
    g.bound = Int(j.at("bound").dump());
    for (const auto& node : j.at("nodes")) {
        RatVec coords;
        Int q = Int(node.at("q").dump());
        for (const auto& x : node.at("p")) coords.push_back(Rational(Int(x.dump()), q));
        g.nodes.push_back(SpherePoint::from_coords(g.space, coords));
    }
    for (const auto& e : j.at("edges")) {
        size_t i = e.at(0).get<size_t>(), k = e.at(1).get<size_t>();
        if (i >= g.nodes.size() || k >= g.nodes.size())
            throw std::invalid_argument("graph_from_json: edge index out of range");
        g.edges.emplace_back(i, k);
    }
    return g;
}

}  // namespace stereo
