#include <jvoa/fock.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jvoa {

QuadGenerator QuadGenerator::make(int i, long m, int j, long n)
{
    // L_{a,b}(m,n) = L_{b,a}(n,m); store the lexicographically smaller slot first
    if (std::pair(i, m) <= std::pair(j, n))
        return QuadGenerator{i, m, j, n};
    return QuadGenerator{j, n, i, m};
}

std::string QuadGenerator::str() const
{
    std::ostringstream os;
    os << "L[" << i << "," << j << "](" << m << "," << n << ")";
    return os.str();
}

FockState FockState::vacuum()
{
    FockState s;
    s.terms[{}] = CentralPoly(Rational(1));
    return s;
}

void FockState::add(const Monomial& mono, const CentralPoly& c)
{
    if (c.is_zero())
        return;
    auto& slot = terms[mono];
    slot += c;
    if (slot.is_zero())
        terms.erase(mono);
}

FockState& FockState::operator+=(const FockState& o)
{
    for (const auto& [mono, c] : o.terms)
        add(mono, c);
    return *this;
}

FockState FockState::scaled(const CentralPoly& c) const
{
    FockState out;
    if (c.is_zero())
        return out;
    for (const auto& [mono, coeff] : terms)
        out.terms[mono] = coeff * c;
    return out;
}

long FockState::max_degree() const
{
    long best = 0;
    for (const auto& [mono, c] : terms) {
        long deg = 0;
        for (const auto& g : mono)
            deg += g.degree();
        best = std::max(best, deg);
    }
    return best;
}

void QuadElement::add(const Rational& c, const QuadGenerator& g)
{
    if (c != 0)
        quad.push_back({c, g});
}

void QuadElement::canonicalize()
{
    std::sort(quad.begin(), quad.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<std::pair<Rational, QuadGenerator>> out;
    for (const auto& [c, g] : quad) {
        if (!out.empty() && out.back().second == g)
            out.back().first += c;
        else
            out.push_back({c, g});
    }
    std::erase_if(out, [](const auto& t) { return t.first == 0; });
    quad = std::move(out);
}

std::string QuadElement::str() const
{
    std::string s;
    for (const auto& [c, g] : quad)
        s += (s.empty() ? "" : " + ") + to_string(c) + "*" + g.str();
    if (central != 0)
        s += (s.empty() ? "" : " + ") + to_string(central) + "*c";
    return s.empty() ? "0" : s;
}

QuadElement normal_order_pair(int i, long m, int j, long n, const BilinearSpace& space)
{
    QuadElement out;
    out.add(2, QuadGenerator::make(i, m, j, n));
    if (m >= n && m + n == 0)
        out.central = Rational(m) * space.gram[i][j];
    return out;
}

QuadElement bracket_new(const QuadGenerator& g, const QuadGenerator& h,
                        const BilinearSpace& space)
{
    // [L_{a,b}(m,n), L_{u,v}(p,q)]_new, four delta terms, each a single-mode
    // product pushed back into normal order.
    const int a = g.i, b = g.j, u = h.i, v = h.j;
    const long m = g.m, n = g.n, p = h.m, q = h.n;
    QuadElement out;
    auto accumulate = [&](const Rational& coeff, const QuadElement& prod) {
        for (const auto& [c, gen] : prod.quad)
            out.add(coeff * c, gen);
        out.central += coeff * prod.central;
    };
    const Rational quarter(1, 4);
    if (n + p == 0 && n != 0)
        accumulate(quarter * n * space.gram[b][u], normal_order_pair(a, m, v, q, space));
    if (m + p == 0 && m != 0)
        accumulate(quarter * m * space.gram[a][u], normal_order_pair(b, n, v, q, space));
    if (n + q == 0 && n != 0)
        accumulate(quarter * n * space.gram[b][v], normal_order_pair(u, p, a, m, space));
    if (m + q == 0 && m != 0)
        accumulate(quarter * m * space.gram[a][v], normal_order_pair(u, p, b, n, space));
    out.canonicalize();
    return out;
}

namespace {

constexpr int kMaxDepth = 4096;

Monomial insert_sorted(const Monomial& mono, const QuadGenerator& g)
{
    Monomial out = mono;
    out.insert(std::upper_bound(out.begin(), out.end(), g), g);
    return out;
}

// g applied to a single unit-coefficient monomial.
FockState apply_to_monomial(const QuadGenerator& g, const Monomial& mono,
                            const BilinearSpace& space, int depth)
{
    if (depth > kMaxDepth)
        throw std::logic_error("generator commutation did not terminate");
    FockState out;
    if (g.is_creation()) {
        out.add(insert_sorted(mono, g), CentralPoly(Rational(1)));
        return out;
    }
    if (mono.empty())
        return out; // B_+ annihilates the vacuum
    const QuadGenerator h = mono.front();
    const Monomial rest(mono.begin() + 1, mono.end());

    // g h rest = h (g rest) + [g,h]_new rest
    FockState sub = apply_to_monomial(g, rest, space, depth + 1);
    for (const auto& [sub_mono, c] : sub.terms)
        out.add(insert_sorted(sub_mono, h), c);

    QuadElement br = bracket_new(g, h, space);
    for (const auto& [c, gen] : br.quad)
        out += apply_to_monomial(gen, rest, space, depth + 1).scaled(CentralPoly(c));
    if (br.central != 0)
        out.add(rest, CentralPoly::r_power(1, br.central)); // c acts as r
    return out;
}

} // namespace

FockState apply_generator(const QuadGenerator& g, const FockState& psi,
                          const BilinearSpace& space)
{
    FockState out;
    for (const auto& [mono, c] : psi.terms)
        out += apply_to_monomial(g, mono, space, 0).scaled(c);
    return out;
}

FockState apply_element(const QuadElement& x, const FockState& psi,
                        const BilinearSpace& space)
{
    FockState out;
    for (const auto& [c, g] : x.quad)
        out += apply_generator(g, psi, space).scaled(CentralPoly(c));
    if (x.central != 0)
        out += psi.scaled(CentralPoly::r_power(1, x.central));
    return out;
}

FockState apply_field_mode(const Vec& a, const Vec& b, long l, const FockState& psi,
                           const BilinearSpace& space)
{
    if (a.size() != static_cast<std::size_t>(space.dim) ||
        b.size() != static_cast<std::size_t>(space.dim))
        throw std::invalid_argument("vector dimension mismatch");
    FockState out;
    for (const auto& [mono, coeff] : psi.terms) {
        long deg = 0;
        for (const auto& g : mono)
            deg += g.degree();
        // Modes outside [l-1-deg, deg] either annihilate this monomial or
        // are killed by the partner annihilator; the window is exact.
        for (long k = l - 1 - deg; k <= deg; ++k) {
            const long m = -k + l - 1;
            for (int bi = 0; bi < space.dim; ++bi) {
                if (a[bi] == 0)
                    continue;
                for (int bj = 0; bj < space.dim; ++bj) {
                    if (b[bj] == 0)
                        continue;
                    auto gen = QuadGenerator::make(bi, m, bj, k);
                    out += apply_to_monomial(gen, mono, space, 0)
                               .scaled(coeff * CentralPoly(a[bi] * b[bj]));
                }
            }
        }
    }
    return out;
}

CentralPoly vacuum_coeff(const FockState& psi)
{
    auto it = psi.terms.find(Monomial{});
    return it == psi.terms.end() ? CentralPoly() : it->second;
}

CentralPoly mode_correlator(const PairSequence& T,
                            const std::vector<std::pair<long, long>>& modes)
{
    T.validate();
    if (modes.size() != static_cast<std::size_t>(T.n()))
        throw std::invalid_argument("one (m,n) mode pair per element of T expected");
    long shift = 0;
    for (const auto& [m, n] : modes)
        shift += m + n;
    if (shift != 0)
        return {}; // grading selection rule

    FockState state = FockState::vacuum();
    for (int idx = T.n() - 1; idx >= 0; --idx) {
        const auto& [a, b] = T.pairs[idx];
        const auto& [m, n] = modes[idx];
        FockState next;
        for (int bi = 0; bi < T.space.dim; ++bi) {
            if (a[bi] == 0)
                continue;
            for (int bj = 0; bj < T.space.dim; ++bj) {
                if (b[bj] == 0)
                    continue;
                auto gen = QuadGenerator::make(bi, m, bj, n);
                next += apply_generator(gen, state, T.space)
                            .scaled(CentralPoly(a[bi] * b[bj]));
            }
        }
        state = std::move(next);
        if (state.is_zero())
            return {};
    }
    return vacuum_coeff(state);
}

CentralPoly field_correlator_coeff(const PairSequence& T, const std::vector<long>& ls)
{
    T.validate();
    if (ls.size() != static_cast<std::size_t>(T.n()))
        throw std::invalid_argument("one mode per element of T expected");
    long total = 0;
    for (long l : ls)
        total += l;
    if (total != T.n())
        return {}; // weight selection rule

    FockState state = FockState::vacuum();
    for (int idx = T.n() - 1; idx >= 0; --idx) {
        state = apply_field_mode(T.pairs[idx].first, T.pairs[idx].second, ls[idx], state,
                                 T.space);
        if (state.is_zero())
            return {};
    }
    return vacuum_coeff(state);
}

namespace {

// coefficient of u^eu v^ev in iota_{u,v} (u-v)^{-2}: k when (eu,ev) = (-k-1,k-1)
long iota2_coeff(long eu, long ev)
{
    long k = -eu - 1;
    return (k >= 1 && ev == k - 1) ? k : 0;
}

std::string mismatch_label(const char* form, int a, int b, int u, int v, long m, long n,
                           long p, long q, const QuadElement& lhs, const QuadElement& rhs)
{
    std::ostringstream os;
    os << form << " a=" << a << " b=" << b << " u=" << u << " v=" << v << " modes=(" << m
       << "," << n << ";" << p << "," << q << "): bracket " << lhs.str() << " vs series "
       << rhs.str();
    return os.str();
}

} // namespace

Prop1Report check_prop1(const BilinearSpace& space, long window)
{
    Prop1Report report;
    const int d = space.dim;
    auto record = [&](const QuadElement& lhs, const QuadElement& rhs, auto&&... label) {
        ++report.cases;
        if (report.ok && !(lhs == rhs)) {
            report.ok = false;
            report.first_mismatch = mismatch_label(label..., lhs, rhs);
        }
    };

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v) {
                    // [L++(x,y), L--(z,w)]: m,n >= 0, p,q <= -1
                    for (long m = 0; m <= window; ++m)
                        for (long n = 0; n <= window; ++n)
                            for (long p = -window; p <= -1; ++p)
                                for (long q = -window; q <= -1; ++q) {
                                    QuadElement lhs =
                                        bracket_new(QuadGenerator::make(a, m, b, n),
                                                    QuadGenerator::make(u, p, v, q), space);
                                    QuadElement rhs;
                                    if (long k = iota2_coeff(-n - 1, -q - 1))
                                        rhs.add(Rational(k, 2) * space.gram[b][v],
                                                QuadGenerator::make(u, p, a, m));
                                    if (long k = iota2_coeff(-m - 1, -q - 1))
                                        rhs.add(Rational(k, 2) * space.gram[a][v],
                                                QuadGenerator::make(u, p, b, n));
                                    if (long k = iota2_coeff(-m - 1, -p - 1))
                                        rhs.add(Rational(k, 2) * space.gram[a][u],
                                                QuadGenerator::make(v, q, b, n));
                                    if (long k = iota2_coeff(-n - 1, -p - 1))
                                        rhs.add(Rational(k, 2) * space.gram[b][u],
                                                QuadGenerator::make(v, q, a, m));
                                    long kxz = iota2_coeff(-m - 1, -p - 1);
                                    long kyw = iota2_coeff(-n - 1, -q - 1);
                                    long kxw = iota2_coeff(-m - 1, -q - 1);
                                    long kyz = iota2_coeff(-n - 1, -p - 1);
                                    rhs.central =
                                        Rational(kxz * kyw, 4) * space.gram[a][u] *
                                            space.gram[b][v] +
                                        Rational(kxw * kyz, 4) * space.gram[a][v] *
                                            space.gram[b][u];
                                    rhs.canonicalize();
                                    record(lhs, rhs, "++/--", a, b, u, v, m, n, p, q);
                                }
                    // [L++(x,y), L-+(z,w)]: m,n >= 0, p <= -1, q >= 0
                    for (long m = 0; m <= window; ++m)
                        for (long n = 0; n <= window; ++n)
                            for (long p = -window; p <= -1; ++p)
                                for (long q = 0; q <= window; ++q) {
                                    QuadElement lhs =
                                        bracket_new(QuadGenerator::make(a, m, b, n),
                                                    QuadGenerator::make(u, p, v, q), space);
                                    QuadElement rhs;
                                    if (long k = iota2_coeff(-m - 1, -p - 1))
                                        rhs.add(Rational(k, 2) * space.gram[a][u],
                                                QuadGenerator::make(b, n, v, q));
                                    if (long k = iota2_coeff(-n - 1, -p - 1))
                                        rhs.add(Rational(k, 2) * space.gram[b][u],
                                                QuadGenerator::make(a, m, v, q));
                                    rhs.canonicalize();
                                    record(lhs, rhs, "++/-+", a, b, u, v, m, n, p, q);
                                }
                    // [L++, L++] = 0
                    for (long m = 0; m <= window; ++m)
                        for (long n = 0; n <= window; ++n)
                            for (long p = 0; p <= window; ++p)
                                for (long q = 0; q <= window; ++q) {
                                    QuadElement lhs =
                                        bracket_new(QuadGenerator::make(a, m, b, n),
                                                    QuadGenerator::make(u, p, v, q), space);
                                    record(lhs, QuadElement{}, "++/++", a, b, u, v, m, n, p,
                                           q);
                                }
                }
    return report;
}

FockState virasoro_state(const BilinearSpace& space)
{
    Mat ginv = space.gram_inverse();
    FockState out;
    for (int k = 0; k < space.dim; ++k)
        for (int l = 0; l < space.dim; ++l)
            if (ginv[k][l] != 0)
                out.add({QuadGenerator::make(k, -1, l, -1)}, CentralPoly(ginv[k][l]));
    return out;
}

} // namespace jvoa
