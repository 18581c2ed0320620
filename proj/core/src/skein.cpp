#include "qlink/skein.hpp"

#include "qlink/errors.hpp"
#include "qlink/parallel.hpp"
#include "qlink/tangle.hpp"
#include "qlink/tangle_eval.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qlink {

namespace {

Laurent loop_value() {
    return -Laurent::monomial(Var::A, 2) - Laurent::monomial(Var::A, -2);
}

} // namespace

Laurent bracket_statesum(const LinkDiagram& d, int threads) {
    const auto& crossings = d.crossings();
    const int c = static_cast<int>(crossings.size());
    const auto& arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());

    std::map<int, int> arc_index;
    for (int i = 0; i < m; ++i) arc_index[arcs[i]] = i;

    // powers of the loop value, up to the most loops any resolution can make
    std::vector<Laurent> delta_pow;
    delta_pow.push_back(Laurent::one(Var::A));
    const int max_loops = m + d.free_loops() + 1;
    for (int k = 1; k <= max_loops; ++k) delta_pow.push_back(delta_pow.back() * loop_value());

    if (c == 0) return delta_pow[d.free_loops()];

    auto work = [&](unsigned long long begin, unsigned long long end, int) {
        Laurent sum(Var::A);
        std::vector<int> parent(m);
        for (unsigned long long mask = begin; mask < end; ++mask) {
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int a) {
                while (parent[a] != a) a = parent[a] = parent[parent[a]];
                return a;
            };
            int a_count = 0;
            for (int i = 0; i < c; ++i) {
                const auto& arc = crossings[i].arc;
                int s0 = arc_index[arc[0]], s1 = arc_index[arc[1]];
                int s2 = arc_index[arc[2]], s3 = arc_index[arc[3]];
                if (mask & (1ull << i)) {
                    // A-smoothing joins slots 0-1 and 2-3
                    ++a_count;
                    parent[find(s0)] = find(s1);
                    parent[find(s2)] = find(s3);
                } else {
                    parent[find(s1)] = find(s2);
                    parent[find(s3)] = find(s0);
                }
            }
            int loops = d.free_loops();
            for (int i = 0; i < m; ++i)
                if (find(i) == i) ++loops;
            sum += delta_pow[loops].shifted(2 * a_count - c);
        }
        return sum;
    };
    return parallel_chunks<Laurent>(
        1ull << c, threads, Laurent(Var::A), work,
        [](Laurent acc, Laurent part) { return acc + part; });
}

Laurent bracket_functor(const LinkDiagram& d) {
    static const BracketTable table = bracket_table();
    TangleWord w = to_tangle_word(d);
    return eval_word(w, bracket_provider(table)).scalar();
}

Laurent jones(const LinkDiagram& d) {
    const long w = d.writhe();
    Laurent value = bracket_statesum(d).shifted(-3 * w);
    if (w % 2 != 0) value = -value;     // (-A)^(-3w) = (-1)^w A^(-3w)
    return value.retag(Var::TQ, -1);    // A -> t^(-1/4) in quarter-power units
}

Laurent jones_reduced(const LinkDiagram& d) {
    if (d.empty())
        throw ValidationError("reduced normalization is undefined for the empty link");
    Laurent unknot = -Laurent::monomial(Var::TQ, 2) - Laurent::monomial(Var::TQ, -2);
    return jones(d).divide_exact(unknot);
}

std::string jones_string(const Laurent& v) {
    if (v.is_zero()) return "0";
    // Residue of every exponent mod 4 decides the fractional prefix.
    long residue = ((v.coeffs().begin()->first % 4) + 4) % 4;
    bool uniform = true;
    long nearest = 0;
    bool have_nearest = false;
    for (const auto& [e, c] : v.coeffs()) {
        if (((e % 4) + 4) % 4 != residue) uniform = false;
        if (!have_nearest || std::abs(e) < std::abs(nearest) ||
            (std::abs(e) == std::abs(nearest) && e > nearest)) {
            nearest = e;
            have_nearest = true;
        }
    }
    auto frac = [](long num) {
        // exponent in quarter units -> reduced fraction string
        long g = std::gcd(std::abs(num), 4L);
        long n = num / g, d = 4 / g;
        std::ostringstream o;
        if (d == 1)
            o << n;
        else
            o << "(" << n << "/" << d << ")";
        return o.str();
    };
    if (!uniform) {
        // no common fractional part: spell each term
        std::ostringstream out;
        bool first = true;
        for (auto it = v.coeffs().rbegin(); it != v.coeffs().rend(); ++it) {
            mpz_class c = it->second;
            if (first) {
                if (c < 0) { out << "-"; c = -c; }
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (it->first == 0) { out << c.get_str(); continue; }
            if (c != 1) out << c.get_str() << "*";
            out << "t";
            if (it->first != 4) out << "^" << frac(it->first);
        }
        return out.str();
    }
    long r = residue;
    if (r == 3) r = -1;
    if (r == 2 && nearest < 0) r = -2;
    Laurent inner(Var::TQ);
    for (const auto& [e, c] : v.coeffs())
        inner += Laurent::monomial(Var::TQ, (e - r) / 4, c);
    if (r == 0) return canonical_string(inner);
    std::string prefix = "t^(" + std::string(r < 0 ? "-" : "") + (std::abs(r) == 2 ? "1/2" : "1/4") + ")";
    return prefix + "*(" + canonical_string(inner) + ")";
}

} // namespace qlink
