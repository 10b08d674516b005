#include <qdiv/series.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <qdiv/errors.hpp>

namespace qdiv
{

namespace
{

constexpr MultiSeries::Key field_mask = (MultiSeries::Key{1} << MultiSeries::key_bits) - 1u;

bool fits(MultiSeries::Key k, const Exponents &caps) noexcept
{
    for (std::size_t v = 0; v < num_vars; ++v) {
        if (((k >> (v * MultiSeries::key_bits)) & field_mask) > caps[v]) {
            return false;
        }
    }
    return true;
}

void check_cap(std::uint32_t c)
{
    if (c > Truncation::max_cap) {
        throw std::invalid_argument("truncation cap " + std::to_string(c) + " exceeds "
                                    + std::to_string(Truncation::max_cap));
    }
}

} // namespace

char var_name(Var v) noexcept
{
    constexpr char names[] = {'q', 'p', 'x', 'z', 'a', 't'};
    return names[index_of(v)];
}

Var parse_var(char c)
{
    for (auto v : all_vars) {
        if (var_name(v) == c) {
            return v;
        }
    }
    throw std::invalid_argument(std::string("unknown variable '") + c + "'");
}

Exponents exps(std::initializer_list<std::pair<Var, std::uint32_t>> entries)
{
    Exponents e{};
    for (const auto &[v, k] : entries) {
        e[index_of(v)] += k;
    }
    return e;
}

bool Monomial::is_constant() const noexcept
{
    return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

Monomial mono(Rational c, std::initializer_list<std::pair<Var, std::uint32_t>> entries)
{
    return Monomial{std::move(c), exps(entries)};
}

Monomial mono(Var v, std::uint32_t e)
{
    return Monomial{1, exps({{v, e}})};
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r{a.coeff * b.coeff, a.exps};
    for (std::size_t v = 0; v < num_vars; ++v) {
        r.exps[v] += b.exps[v];
    }
    return r;
}

Monomial pow(const Monomial &m, std::uint32_t e)
{
    Monomial r{1, {}};
    mpz_pow_ui(r.coeff.get_num_mpz_t(), m.coeff.get_num_mpz_t(), e);
    mpz_pow_ui(r.coeff.get_den_mpz_t(), m.coeff.get_den_mpz_t(), e);
    r.coeff.canonicalize();
    for (std::size_t v = 0; v < num_vars; ++v) {
        r.exps[v] = m.exps[v] * e;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Truncation

Truncation::Truncation(const Exponents &caps) : caps_(caps)
{
    std::for_each(caps_.begin(), caps_.end(), check_cap);
}

Truncation::Truncation(std::initializer_list<std::pair<Var, std::uint32_t>> caps)
{
    for (const auto &[v, c] : caps) {
        check_cap(c);
        caps_[index_of(v)] = c;
    }
}

Truncation Truncation::with(Var v, std::uint32_t cap) const
{
    check_cap(cap);
    Truncation r = *this;
    r.caps_[index_of(v)] = cap;
    return r;
}

bool Truncation::contains(const Exponents &e) const noexcept
{
    for (std::size_t v = 0; v < num_vars; ++v) {
        if (e[v] > caps_[v]) {
            return false;
        }
    }
    return true;
}

Truncation min(const Truncation &a, const Truncation &b)
{
    Truncation r;
    for (std::size_t v = 0; v < num_vars; ++v) {
        r.caps_[v] = std::min(a.caps_[v], b.caps_[v]);
    }
    return r;
}

std::string to_string(const Truncation &tr)
{
    std::string s;
    for (auto v : all_vars) {
        if (!s.empty()) {
            s += ',';
        }
        s += var_name(v);
        s += '=';
        s += std::to_string(tr.cap(v));
    }
    return s;
}

// ---------------------------------------------------------------------------
// MultiSeries

class TermAccumulator
{
public:
    // Adopts terms that are already sorted, unique, nonzero and in-box.
    static MultiSeries adopt(std::vector<MultiSeries::Term> terms, const Truncation &tr)
    {
        MultiSeries s(tr);
        s.terms_ = std::move(terms);
        return s;
    }
};

MultiSeries::Key MultiSeries::pack(const Exponents &e) noexcept
{
    Key k = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
        k |= (Key{e[v]} & field_mask) << (v * key_bits);
    }
    return k;
}

Exponents MultiSeries::unpack(Key k) noexcept
{
    Exponents e{};
    for (std::size_t v = 0; v < num_vars; ++v) {
        e[v] = static_cast<std::uint32_t>((k >> (v * key_bits)) & field_mask);
    }
    return e;
}

MultiSeries MultiSeries::constant(const Rational &c, const Truncation &tr)
{
    MultiSeries s(tr);
    if (sgn(c) != 0) {
        s.terms_.emplace_back(Key{0}, c);
    }
    return s;
}

MultiSeries MultiSeries::from_monomial(const Monomial &m, const Truncation &tr)
{
    MultiSeries s(tr);
    if (sgn(m.coeff) != 0 && tr.contains(m.exps)) {
        s.terms_.emplace_back(pack(m.exps), m.coeff);
    }
    return s;
}

MultiSeries MultiSeries::from_terms(std::vector<Term> terms, const Truncation &tr)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!fits(t.first, tr.caps())) {
            continue;
        }
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && sgn(out.back().second) == 0) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().second) == 0) {
        out.pop_back();
    }
    return TermAccumulator::adopt(std::move(out), tr);
}

Rational MultiSeries::coefficient(const Exponents &e) const
{
    if (!trunc_.contains(e)) {
        throw OutOfTruncation("coefficient requested outside truncation box " + to_string(trunc_));
    }
    const Key k = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term &t, Key key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) {
        return it->second;
    }
    return 0;
}

Rational MultiSeries::constant_term() const
{
    if (!terms_.empty() && terms_.front().first == 0) {
        return terms_.front().second;
    }
    return 0;
}

std::uint32_t MultiSeries::max_degree(Var v) const noexcept
{
    std::uint32_t d = 0;
    for (const auto &t : terms_) {
        d = std::max(d, unpack(t.first)[index_of(v)]);
    }
    return d;
}

std::uint32_t MultiSeries::min_degree(Var v) const noexcept
{
    if (terms_.empty()) {
        return 0;
    }
    std::uint32_t d = Truncation::max_cap + 1;
    for (const auto &t : terms_) {
        d = std::min(d, unpack(t.first)[index_of(v)]);
    }
    return d;
}

MultiSeries MultiSeries::truncated(const Truncation &tr) const
{
    const Truncation box = min(trunc_, tr);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        if (fits(t.first, box.caps())) {
            out.push_back(t);
        }
    }
    return TermAccumulator::adopt(std::move(out), box);
}

MultiSeries MultiSeries::operator-() const
{
    MultiSeries r = *this;
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

namespace
{

// Merge of two canonical term lists, b scaled by sign.
std::vector<MultiSeries::Term> merge_terms(const std::vector<MultiSeries::Term> &a,
                                           const std::vector<MultiSeries::Term> &b, const Exponents &caps,
                                           bool subtract)
{
    std::vector<MultiSeries::Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    auto push = [&](MultiSeries::Key k, Rational c) {
        if (fits(k, caps) && sgn(c) != 0) {
            out.emplace_back(k, std::move(c));
        }
    };
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            push(ia->first, ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            push(ib->first, subtract ? Rational(-ib->second) : ib->second);
            ++ib;
        } else {
            push(ia->first, subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second));
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace

MultiSeries &MultiSeries::operator+=(const MultiSeries &o)
{
    trunc_ = min(trunc_, o.trunc_);
    terms_ = merge_terms(terms_, o.terms_, trunc_.caps(), false);
    return *this;
}

MultiSeries &MultiSeries::operator-=(const MultiSeries &o)
{
    trunc_ = min(trunc_, o.trunc_);
    terms_ = merge_terms(terms_, o.terms_, trunc_.caps(), true);
    return *this;
}

MultiSeries &MultiSeries::operator*=(const MultiSeries &o)
{
    *this = mul(*this, o);
    return *this;
}

MultiSeries &MultiSeries::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

MultiSeries operator*(const MultiSeries &a, const MultiSeries &b)
{
    return mul(a, b);
}

bool operator==(const MultiSeries &a, const MultiSeries &b)
{
    const Truncation box = min(a.trunc_, b.trunc_);
    if (box == a.trunc_ && box == b.trunc_) {
        return a.terms_ == b.terms_;
    }
    return a.truncated(box).terms_ == b.truncated(box).terms_;
}

std::ostream &operator<<(std::ostream &os, const MultiSeries &s)
{
    if (s.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto &[k, c] : s.terms()) {
        const auto e = MultiSeries::unpack(k);
        const bool is_const = k == 0;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (is_const || mag != 1) {
            os << mag;
            need_star = true;
        }
        for (auto v : all_vars) {
            const auto d = e[index_of(v)];
            if (d == 0) {
                continue;
            }
            if (need_star) {
                os << '*';
            }
            os << var_name(v);
            if (d > 1) {
                os << '^' << d;
            }
            need_star = true;
        }
    }
    return os;
}

std::string to_string(const MultiSeries &s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

MultiSeries add(const MultiSeries &a, const MultiSeries &b)
{
    return a + b;
}

MultiSeries negate(const MultiSeries &s)
{
    return -s;
}

MultiSeries mul_monomial(const MultiSeries &s, const Monomial &m)
{
    const Truncation &tr = s.truncation();
    if (sgn(m.coeff) == 0 || !tr.contains(m.exps)) {
        return MultiSeries(tr);
    }
    const auto shift = MultiSeries::pack(m.exps);
    std::vector<MultiSeries::Term> out;
    out.reserve(s.size());
    for (const auto &[k, c] : s.terms()) {
        const auto nk = k + shift;
        if (fits(nk, tr.caps())) {
            out.emplace_back(nk, c * m.coeff);
        }
    }
    // Adding a fixed shift preserves key order.
    return TermAccumulator::adopt(std::move(out), tr);
}

MultiSeries mul_one_minus(const MultiSeries &s, const Monomial &m)
{
    return s - mul_monomial(s, m);
}

MultiSeries div_one_minus(const MultiSeries &s, const Monomial &m)
{
    const Truncation &tr = s.truncation();
    if (m.is_constant()) {
        if (m.coeff == 1) {
            throw NonInvertible("division by 1 - 1");
        }
        return s * Rational(1 / (1 - m.coeff));
    }
    if (sgn(m.coeff) == 0 || !tr.contains(m.exps)) {
        return s;
    }
    const auto shift = MultiSeries::pack(m.exps);
    // r = s + m r; keys are visited in increasing order, so r[k - shift] is
    // final before it feeds r[k].
    std::map<MultiSeries::Key, Rational> acc;
    for (const auto &[k, c] : s.terms()) {
        acc.emplace_hint(acc.end(), k, c);
    }
    Rational tmp;
    for (auto it = acc.begin(); it != acc.end(); ++it) {
        if (sgn(it->second) == 0) {
            continue;
        }
        const auto nk = it->first + shift;
        if (!fits(nk, tr.caps())) {
            continue;
        }
        mpq_mul(tmp.get_mpq_t(), it->second.get_mpq_t(), m.coeff.get_mpq_t());
        auto [target, inserted] = acc.try_emplace(nk);
        if (inserted) {
            target->second = tmp;
        } else {
            target->second += tmp;
        }
    }
    std::vector<MultiSeries::Term> out;
    out.reserve(acc.size());
    for (auto &[k, c] : acc) {
        if (sgn(c) != 0) {
            out.emplace_back(k, std::move(c));
        }
    }
    return TermAccumulator::adopt(std::move(out), tr);
}

MultiSeries inverse(const MultiSeries &s)
{
    const Truncation &tr = s.truncation();
    const Rational c0 = s.constant_term();
    if (sgn(c0) == 0) {
        throw NonInvertible("series has zero constant term");
    }
    const Rational neg_inv_c0 = -1 / c0;
    std::vector<MultiSeries::Term> tail(s.terms().begin() + 1, s.terms().end());

    // r[k] is complete once every smaller key has pushed its contributions:
    // r[k + j] -= s[j] r[k] / c0 for every nonconstant term j of s.
    std::map<MultiSeries::Key, Rational> acc;
    acc.emplace(0, 1 / c0);
    Rational tmp;
    for (auto it = acc.begin(); it != acc.end(); ++it) {
        if (sgn(it->second) == 0) {
            continue;
        }
        if (it->first != 0) {
            // Incoming contributions were accumulated as -sum s[j] r[k-j];
            // scale by 1/c0 now that the sum is final.
            it->second *= -neg_inv_c0;
        }
        for (const auto &[j, sj] : tail) {
            const auto nk = it->first + j;
            if (!fits(nk, tr.caps())) {
                continue;
            }
            mpq_mul(tmp.get_mpq_t(), sj.get_mpq_t(), it->second.get_mpq_t());
            auto [target, inserted] = acc.try_emplace(nk);
            target->second -= tmp;
        }
    }
    std::vector<MultiSeries::Term> out;
    out.reserve(acc.size());
    for (auto &[k, c] : acc) {
        if (sgn(c) != 0) {
            out.emplace_back(k, std::move(c));
        }
    }
    return TermAccumulator::adopt(std::move(out), tr);
}

MultiSeries substitute(const MultiSeries &s, Var v, const Monomial &target)
{
    const Truncation &tr = s.truncation();
    const auto vi = index_of(v);
    std::vector<MultiSeries::Term> out;
    out.reserve(s.size());
    for (const auto &[k, c] : s.terms()) {
        auto e = MultiSeries::unpack(k);
        const auto d = e[vi];
        e[vi] = 0;
        bool inside = true;
        for (std::size_t w = 0; w < num_vars; ++w) {
            const std::uint64_t total = std::uint64_t{e[w]} + std::uint64_t{target.exps[w]} * d;
            if (total > tr.caps()[w]) {
                inside = false;
                break;
            }
            e[w] = static_cast<std::uint32_t>(total);
        }
        if (!inside) {
            continue;
        }
        Monomial factor = pow(Monomial{target.coeff, {}}, d);
        out.emplace_back(MultiSeries::pack(e), c * factor.coeff);
    }
    return MultiSeries::from_terms(std::move(out), tr);
}

MultiSeries geometric_factor(long d, const Truncation &tr, Var base)
{
    if (d == 0) {
        throw ZeroExponent("geometric factor 1/(1 - q^0) is a pole");
    }
    const auto ad = static_cast<std::uint32_t>(d < 0 ? -d : d);
    const auto one = MultiSeries::constant(1, tr);
    if (d > 0) {
        return div_one_minus(one, mono(base, ad));
    }
    // 1/(1 - q^{-|d|}) = -q^{|d|}/(1 - q^{|d|})
    return div_one_minus(MultiSeries::from_monomial(mono(-1, {{base, ad}}), tr), mono(base, ad));
}

MultiSeries pow(const MultiSeries &s, unsigned e)
{
    MultiSeries r = MultiSeries::constant(1, s.truncation());
    MultiSeries b = s;
    while (e != 0) {
        if (e & 1u) {
            r = mul(r, b);
        }
        e >>= 1;
        if (e != 0) {
            b = mul(b, b);
        }
    }
    return r;
}

} // namespace qdiv
