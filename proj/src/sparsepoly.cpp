#include "verifier/sparsepoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "verifier/rng.hpp"

namespace hv {

SparsePoly SparsePoly::constant(QuadExt c) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.emplace(Exp{}, std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(const std::string& name) {
    SparsePoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exp{1}, QuadExt(BigRational(1)));
    return p;
}

SparsePoly SparsePoly::from_terms(std::vector<std::string> vars,
                                  std::vector<std::pair<Exp, QuadExt>> terms) {
    std::vector<std::size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
    SparsePoly p;
    p.vars_.reserve(vars.size());
    for (std::size_t i : order) p.vars_.push_back(vars[i]);
    for (std::size_t i = 1; i < p.vars_.size(); ++i)
        if (p.vars_[i] == p.vars_[i - 1]) throw std::invalid_argument("duplicate variable name");
    for (auto& [e, c] : terms) {
        if (e.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
        Exp pe(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) pe[i] = e[order[i]];
        p.insert_term(pe, std::move(c));
    }
    p.check_cap();
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

QuadExt SparsePoly::constant_value() const {
    if (terms_.empty()) return QuadExt();
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

bool SparsePoly::rational_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_rational(); });
}

unsigned SparsePoly::degree(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
}

unsigned SparsePoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

void SparsePoly::insert_term(const Exp& e, QuadExt c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePoly::check_cap() const {
    if (total_degree() > kDegreeCap) throw std::runtime_error("polynomial degree cap exceeded");
}

std::pair<SparsePoly, SparsePoly> SparsePoly::aligned(const SparsePoly& a, const SparsePoly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    return {a.with_vars(u), b.with_vars(u)};
}

SparsePoly SparsePoly::with_vars(std::vector<std::string> names) const {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(names.begin(), names.end(), vars_[i]);
        if (it == names.end() || *it != vars_[i])
            throw std::invalid_argument("with_vars dropped a used variable");
        pos[i] = static_cast<std::size_t>(it - names.begin());
    }
    SparsePoly p;
    p.vars_ = std::move(names);
    for (const auto& [e, c] : terms_) {
        Exp ne(p.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        p.terms_.emplace(std::move(ne), c);
    }
    return p;
}

SparsePoly SparsePoly::trimmed() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    SparsePoly p;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) p.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exp ne;
        ne.reserve(p.vars_.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        p.terms_.emplace(std::move(ne), c);
    }
    return p;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly p;
    p.vars_ = vars_;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (vars_ != o.vars_) {
        auto [a, b] = aligned(*this, o);
        *this = std::move(a);
        for (const auto& [e, c] : b.terms_) insert_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    auto [x, y] = SparsePoly::aligned(a, b);
    SparsePoly p;
    p.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exp e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.insert_term(e, ca * cb);
        }
    }
    p.check_cap();
    return p;
}

SparsePoly operator*(const QuadExt& c, const SparsePoly& p) {
    SparsePoly r;
    r.vars_ = p.vars_;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : p.terms_) r.terms_.emplace(e, c * t);
    return r;
}

SparsePoly operator/(const SparsePoly& a, const SparsePoly& b) {
    if (!b.is_constant() || b.is_zero())
        throw std::domain_error("polynomial division only by nonzero constants");
    QuadExt inv = QuadExt(BigRational(1)) / b.constant_value();
    return inv * a;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    auto [x, y] = SparsePoly::aligned(a, b);
    return x.terms_ == y.terms_;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r = constant(1L);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

SparsePoly SparsePoly::deriv(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    SparsePoly p;
    p.vars_ = vars_;
    if (it == vars_.end()) return p;
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exp ne = e;
        --ne[k];
        p.insert_term(ne, QuadExt(BigRational(static_cast<long>(e[k]))) * c);
    }
    return p;
}

QuadExt SparsePoly::eval(const std::map<std::string, QuadExt>& point) const {
    // memoized powers per variable
    std::vector<std::vector<QuadExt>> pows(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) throw std::invalid_argument("eval: unbound variable " + vars_[i]);
        pows[i].push_back(QuadExt(BigRational(1)));
        pows[i].push_back(it->second);
    }
    QuadExt acc;
    for (const auto& [e, c] : terms_) {
        QuadExt t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (pows[i].size() <= e[i]) pows[i].push_back(pows[i].back() * pows[i][1]);
            t *= pows[i][e[i]];
        }
        acc += t;
    }
    return acc;
}

Interval SparsePoly::eval_interval(const std::map<std::string, Interval>& point) const {
    std::vector<Interval> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end())
            throw std::invalid_argument("eval_interval: unbound variable " + vars_[i]);
        vals[i] = it->second;
    }
    Interval acc(BigRational(0));
    for (const auto& [e, c] : terms_) {
        Interval t = enclose(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * vals[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

SparsePoly SparsePoly::eval_partial(const std::map<std::string, QuadExt>& point) const {
    SparsePoly acc;
    std::vector<const QuadExt*> bound(vars_.size(), nullptr);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it != point.end())
            bound[i] = &it->second;
        else
            rest.push_back(vars_[i]);
    }
    acc.vars_ = rest;
    for (const auto& [e, c] : terms_) {
        QuadExt coeff = c;
        Exp ne;
        ne.reserve(rest.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (bound[i]) {
                for (unsigned k = 0; k < e[i]; ++k) coeff *= *bound[i];
            } else {
                ne.push_back(e[i]);
            }
        }
        acc.insert_term(ne, std::move(coeff));
    }
    return acc;
}

SparsePoly SparsePoly::subs(const std::string& var, const SparsePoly& repl) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<SparsePoly> pows{constant(1L)};
    SparsePoly acc;
    for (const auto& [e, c] : terms_) {
        while (pows.size() <= e[k]) pows.push_back(pows.back() * repl);
        Exp ne = e;
        ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(k));
        SparsePoly mono = from_terms(rest, {{ne, c}});
        acc += mono * pows[e[k]];
    }
    return acc;
}

SparsePoly SparsePoly::reduce_square(const std::string& var, const SparsePoly& square) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    std::vector<SparsePoly> pows{constant(1L)};
    SparsePoly acc;
    for (const auto& [e, c] : terms_) {
        unsigned half = e[k] / 2;
        while (pows.size() <= half) pows.push_back(pows.back() * square);
        Exp ne = e;
        ne[k] = e[k] % 2;
        SparsePoly mono = from_terms(vars_, {{ne, c}});
        acc += mono * pows[half];
    }
    return acc;
}

std::map<unsigned, SparsePoly> SparsePoly::collect(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    std::map<unsigned, SparsePoly> out;
    if (it == vars_.end()) {
        if (!is_zero()) out.emplace(0u, *this);
        return out;
    }
    std::size_t k = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& [e, c] : terms_) {
        Exp ne = e;
        ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(k));
        auto [slot, fresh] = out.try_emplace(e[k]);
        if (fresh) slot->second.vars_ = rest;
        slot->second.insert_term(ne, c);
    }
    for (auto o = out.begin(); o != out.end();)
        o = o->second.is_zero() ? out.erase(o) : std::next(o);
    return out;
}

BigRational SparsePoly::content() const {
    if (is_zero()) throw std::logic_error("content of zero polynomial");
    if (!rational_coeffs()) throw std::logic_error("content requires rational coefficients");
    BigRational g(0);
    for (const auto& [e, c] : terms_) g = gcd(g, c.a);
    return g;
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [r, d] = aligned(*this, divisor);
    SparsePoly q;
    q.vars_ = r.vars_;
    const auto& [de, dc] = *d.terms_.rbegin();
    while (!r.terms_.empty()) {
        const auto& [re, rc] = *r.terms_.rbegin();
        Exp qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            if (re[i] < de[i]) throw std::runtime_error("divide_exact: not divisible");
            qe[i] = re[i] - de[i];
        }
        QuadExt qc = rc / dc;
        SparsePoly mono = from_terms(q.vars_, {{qe, qc}});
        q += mono;
        r -= mono * d;
    }
    return q;
}

std::string SparsePoly::canonical_str() const {
    std::ostringstream os;
    SparsePoly t = trimmed();
    for (std::size_t i = 0; i < t.vars_.size(); ++i) os << (i ? "," : "") << t.vars_[i];
    os << ";";
    for (const auto& [e, c] : t.terms_) {
        os << "[";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << "]" << c.a.str();
        if (!c.b.is_zero()) os << "r3" << c.b.str();
        os << ";";
    }
    return os.str();
}

std::uint64_t SparsePoly::hash() const {
    std::string s = canonical_str();
    return fnv1a64(s.data(), s.size());
}

nlohmann::json SparsePoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        if (!c.is_rational()) throw std::logic_error("to_json requires rational coefficients");
        terms.push_back({c.a.str(), e});
    }
    return {{"vars", vars_}, {"terms", terms}};
}

SparsePoly SparsePoly::from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::pair<Exp, QuadExt>> terms;
    for (const auto& t : j.at("terms")) {
        BigRational c(t.at(0).get<std::string>());
        Exp e = t.at(1).get<Exp>();
        terms.emplace_back(std::move(e), QuadExt(std::move(c)));
    }
    return from_terms(std::move(vars), std::move(terms));
}

SparsePoly SparsePoly::from_json_pair(const nlohmann::json& rational, const nlohmann::json& sqrt3) {
    SparsePoly p;
    if (!rational.is_null()) p += from_json(rational);
    if (!sqrt3.is_null()) p += QuadExt::sqrt3() * from_json(sqrt3);
    return p;
}

}  // namespace hv
