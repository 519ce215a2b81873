#include "verifier/unipoly.hpp"

#include <deque>
#include <stdexcept>

namespace hv {

UniPoly UniPoly::collect(const SparsePoly& f, const std::string& var) {
    UniPoly u;
    u.var = var;
    auto parts = f.collect(var);
    if (!parts.empty()) {
        u.c.resize(parts.rbegin()->first + 1);
        for (auto& [k, p] : parts) u.c[k] = std::move(p);
    }
    return u;
}

SparsePoly UniPoly::expand() const {
    SparsePoly acc;
    SparsePoly x = SparsePoly::variable(var);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) acc += c[k] * x.pow(static_cast<unsigned>(k));
    return acc;
}

void UniPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

SparsePoly resultant(const UniPoly& f0, const UniPoly& g0) {
    if (f0.var != g0.var) throw std::invalid_argument("resultant: variable mismatch");
    UniPoly f = f0, g = g0;
    f.normalize();
    g.normalize();
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw std::invalid_argument("resultant of zero polynomial");
    if (m == 0 && n == 0) return SparsePoly::constant(1L);
    if (m == 0) return f.c[0].pow(static_cast<unsigned>(n));
    if (n == 0) return g.c[0].pow(static_cast<unsigned>(m));

    // Sylvester matrix, rows of f coefficients then rows of g coefficients
    int sz = m + n;
    std::vector<std::vector<SparsePoly>> M(
        static_cast<std::size_t>(sz),
        std::vector<SparsePoly>(static_cast<std::size_t>(sz)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = f.c[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = g.c[static_cast<std::size_t>(n - k)];

    // fraction-free Bareiss elimination
    bool neg = false;
    SparsePoly prev = SparsePoly::constant(1L);
    for (int k = 0; k < sz - 1; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < sz; ++i)
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return SparsePoly();  // singular: resultant vanishes
            std::swap(M[k], M[swap_row]);
            neg = !neg;
        }
        for (int i = k + 1; i < sz; ++i) {
            for (int j = k + 1; j < sz; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).divide_exact(prev);
            M[i][k] = SparsePoly();
        }
        prev = M[k][k];
    }
    SparsePoly det = M[sz - 1][sz - 1];
    return neg ? -det : det;
}

void RatPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

BigRational RatPoly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

RatPoly RatPoly::deriv() const {
    RatPoly d;
    for (std::size_t i = 1; i < c.size(); ++i)
        d.c.push_back(BigRational(static_cast<long>(i)) * c[i]);
    d.normalize();
    return d;
}

RatPoly RatPoly::monic() const {
    RatPoly r = *this;
    r.normalize();
    if (r.c.empty()) return r;
    BigRational lead = r.c.back();
    for (auto& x : r.c) x /= lead;
    return r;
}

RatPoly RatPoly::from_sparse(const SparsePoly& f) {
    SparsePoly t = f.trimmed();
    if (t.vars().size() > 1) throw std::invalid_argument("from_sparse: not univariate");
    if (!t.rational_coeffs()) throw std::invalid_argument("from_sparse: irrational coefficients");
    RatPoly r;
    for (const auto& [e, coeff] : t.terms()) {
        unsigned k = e.empty() ? 0 : e[0];
        if (r.c.size() <= k) r.c.resize(k + 1, BigRational(0));
        r.c[k] = coeff.a;
    }
    r.normalize();
    return r;
}

namespace {

// remainder of a by b, both nonzero, degree(a) >= degree(b)
RatPoly rem(RatPoly a, const RatPoly& b) {
    a.normalize();
    int db = b.degree();
    while (a.degree() >= db && !a.is_zero()) {
        BigRational q = a.c.back() / b.c.back();
        int shift = a.degree() - db;
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<std::size_t>(i + shift)] -= q * b.c[static_cast<std::size_t>(i)];
        a.c.pop_back();
        a.normalize();
    }
    return a;
}

int sign_variations(const std::vector<RatPoly>& chain, const BigRational& x) {
    int v = 0, last = 0;
    for (const auto& f : chain) {
        int s = f.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

RatPoly gcd(RatPoly a, RatPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        RatPoly r = rem(a, b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<RootBracket> isolate_roots(const RatPoly& f0, const BigRational& lo,
                                       const BigRational& hi, const BigRational& width) {
    RatPoly f = f0;
    f.normalize();
    if (f.is_zero()) throw std::invalid_argument("isolate_roots of zero polynomial");
    if (f.degree() == 0) return {};
    RatPoly g = f;
    RatPoly common = gcd(f, f.deriv());
    if (common.degree() > 0) {
        // exact division by the gcd gives the squarefree part
        RatPoly q;
        RatPoly r = f;
        r.normalize();
        int dc = common.degree();
        q.c.assign(static_cast<std::size_t>(r.degree() - dc + 1), BigRational(0));
        while (r.degree() >= dc && !r.is_zero()) {
            BigRational qc = r.c.back() / common.c.back();
            int shift = r.degree() - dc;
            q.c[static_cast<std::size_t>(shift)] = qc;
            for (int i = 0; i <= dc; ++i)
                r.c[static_cast<std::size_t>(i + shift)] -= qc * common.c[static_cast<std::size_t>(i)];
            r.c.pop_back();
            r.normalize();
        }
        g = q;
        g.normalize();
    }

    std::vector<RootBracket> out;
    auto record_exact = [&](const BigRational& x) {
        out.push_back(RootBracket{true, x, x, x});
    };
    if (g.eval(lo).is_zero()) record_exact(lo);
    if (hi != lo && g.eval(hi).is_zero()) record_exact(hi);

    std::vector<RatPoly> chain{g, g.deriv()};
    while (chain.back().degree() > 0) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        for (auto& x : r.c) x = -x;
        r.normalize();
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }

    // number of roots in the open interval (a, b)
    auto count_open = [&](const BigRational& a, const BigRational& b) {
        int n = sign_variations(chain, a) - sign_variations(chain, b);
        if (g.eval(b).is_zero()) --n;
        return n;
    };

    std::deque<std::pair<BigRational, BigRational>> work;
    work.emplace_back(lo, hi);
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        int n = count_open(a, b);
        if (n == 0) continue;
        if (n == 1 && b - a <= width && g.eval(a).sign() * g.eval(b).sign() < 0) {
            out.push_back(RootBracket{false, BigRational(0), a, b});
            continue;
        }
        BigRational m = (a + b) / BigRational(2);
        if (g.eval(m).is_zero()) record_exact(m);
        work.emplace_back(a, m);
        work.emplace_back(m, b);
    }
    return out;
}

}  // namespace hv
