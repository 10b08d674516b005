#pragma once

// Shared machinery for the side builders.

#include <array>
#include <functional>
#include <string>

#include <qdiv/errors.hpp>
#include <qdiv/identities.hpp>
#include <qdiv/qtools.hpp>
#include <qdiv/series.hpp>

namespace qdiv::kit
{

inline long choose2(long k)
{
    return k * (k - 1) / 2;
}

// k(k+1)/2
inline long tri(long k)
{
    return k * (k + 1) / 2;
}

inline Rational sign(long k)
{
    return k % 2 == 0 ? Rational(1) : Rational(-1);
}

// Integer binomial, zero outside 0 <= k <= n.
Rational binomial(long n, long k);

// Signed exponent offsets, one per variable.
using Shift = std::array<long, num_vars>;

Shift shift(std::initializer_list<std::pair<Var, long>> entries);

inline Monomial m(Var v, std::uint32_t e = 1)
{
    return mono(v, e);
}

inline Monomial m(std::initializer_list<std::pair<Var, std::uint32_t>> e, Rational c = 1)
{
    return mono(std::move(c), e);
}

// Both sides of an identity are multiplied by a fixed monomial chosen up
// front so that every summand with a negative exponent offset becomes an
// ordinary power series. `need` records the largest negative offset seen.
class Clearing
{
public:
    void need(Var v, long offset)
    {
        if (offset < 0 && -offset > clear_[index_of(v)]) {
            clear_[index_of(v)] = -offset;
        }
    }
    const Shift &amount() const noexcept
    {
        return clear_;
    }

private:
    Shift clear_{};
};

// Accumulates c * body * vars^(offset + clearing).
class Side
{
public:
    Side(const Truncation &tr, const Clearing &cl = {}) : value_(tr), clear_(cl.amount()) {}

    // Summand after clearing, without adding it.
    MultiSeries contribution(const MultiSeries &body, const Shift &offset = {}, const Rational &c = 1) const;

    void add(const MultiSeries &body, const Shift &offset = {}, const Rational &c = 1)
    {
        value_ += contribution(body, offset, c);
    }

    // Infinite sum over k >= first. `beyond(k)` must guarantee that the k-th
    // summand and every later one vanish in the box; the first such summand
    // is still built and checked. Returns the stop index.
    template <typename Term, typename Beyond>
    long add_infinite(long first, Beyond &&beyond, Term &&term);

    const MultiSeries &value() const noexcept
    {
        return value_;
    }
    const Truncation &truncation() const noexcept
    {
        return value_.truncation();
    }

private:
    MultiSeries value_;
    Shift clear_;
};

// A summand with an optional offset.
struct Summand {
    MultiSeries body;
    Shift offset{};
    Rational coeff{1};
};

inline constexpr long max_infinite_terms = 100000;

template <typename Term, typename Beyond>
long Side::add_infinite(long first, Beyond &&beyond, Term &&term)
{
    for (long k = first; k < first + max_infinite_terms; ++k) {
        Summand s = term(k);
        if (beyond(k)) {
            if (!contribution(s.body, s.offset, s.coeff).is_zero()) {
                throw TruncationTooSmall("summand " + std::to_string(k)
                                         + " past the certified tail bound is nonzero in the box");
            }
            return k;
        }
        add(s.body, s.offset, s.coeff);
    }
    throw TruncationTooSmall("infinite sum did not reach its tail bound");
}

// True when some component of the offset exceeds its cap.
inline bool outside_offset(const Truncation &tr, const Shift &offset)
{
    for (auto v : all_vars) {
        if (offset[index_of(v)] > static_cast<long>(tr.cap(v))) {
            return true;
        }
    }
    return false;
}

// Infinite sum whose summand offsets are componentwise non-decreasing in k
// and whose bodies have non-negative exponents, so the first offset outside
// the box certifies the tail. Only valid without clearing.
template <typename Term>
long add_monotone(Side &side, long first, Term &&term)
{
    Shift last{};
    return side.add_infinite(
        first, [&](long) { return outside_offset(side.truncation(), last); },
        [&](long k) {
            Summand s = term(k);
            last = s.offset;
            return s;
        });
}

// Accessors for builders.
long param(const Params &p, const std::string &name);
void require(bool ok, const std::string &what);

// Common factors.
MultiSeries one(const Truncation &tr);
MultiSeries constant(const Rational &c, const Truncation &tr);
MultiSeries monomial(const Monomial &mono, const Truncation &tr);
// s / (v; v)_n
MultiSeries div_qfact(const MultiSeries &s, Var v, long n);
// s / (v^e; v^e)_n
MultiSeries div_qfact(const MultiSeries &s, Var v, std::uint32_t e, long n);
// Gaussian binomial in v^e.
MultiSeries qbin(long n, long k, const Truncation &tr, Var v = Var::q, std::uint32_t e = 1);
// s / (1 - v^d)^power
MultiSeries div_geometric(const MultiSeries &s, Var v, std::uint32_t d, unsigned power = 1);
// v^d / (1 - v^d) for d > 0, or the rewrite -1/(1 - v^{-d}) for d < 0.
MultiSeries lambert_term(long d, const Truncation &tr, Var v = Var::q);
// A_k(v^n; base) from the Carlitz polynomial, and the classical A_k(v^n).
MultiSeries carlitz_at(unsigned k, Var base, Var v, std::uint32_t n, const Truncation &tr);
MultiSeries eulerian_at(unsigned k, Var v, std::uint32_t n, const Truncation &tr);

// True when a summand carrying the monomial exponent vector `e` lies outside
// the box (it and every later summand with larger exponents vanish).
bool outside(const Truncation &tr, std::initializer_list<std::pair<Var, long>> lower_bounds);

Sides finish(const Side &lhs, const Side &rhs, long stop_index = -1);

// Builders, one per catalog entry, grouped by family.
Sides build_u81(const Params &, const Truncation &);
Sides build_hamme(const Params &, const Truncation &);
Sides build_uch(const Params &, const Truncation &);
Sides build_dilch(const Params &, const Truncation &);
Sides build_prodinger(const Params &, const Truncation &);
Sides build_flz(const Params &, const Truncation &);
Sides build_rdiv(const Params &, const Truncation &);
Sides build_ru81(const Params &, const Truncation &);
Sides build_prodnew(const Params &, const Truncation &);
Sides build_dilchnew(const Params &, const Truncation &);
Sides build_dilchcor(const Params &, const Truncation &);
Sides build_qbt1(const Params &, const Truncation &);

Sides build_new(const Params &, const Truncation &);
Sides build_newpf(const Params &, const Truncation &);
Sides build_new2(const Params &, const Truncation &);
Sides build_sym(const Params &, const Truncation &);
Sides build_qsq(const Params &, const Truncation &);
Sides build_newnew(const Params &, const Truncation &);
Sides build_mnpq(const Params &, const Truncation &);
Sides build_cornew(const Params &, const Truncation &);
Sides build_long(const Params &, const Truncation &);
Sides build_longinf(const Params &, const Truncation &);
Sides build_odddiv(const Params &, const Truncation &);
Sides build_uch001(const Params &, const Truncation &);
Sides build_uch002(const Params &, const Truncation &);
Sides build_pf12(const Params &, const Truncation &);
Sides build_star(const Params &, const Truncation &);

Sides build_dd1(const Params &, const Truncation &);
Sides build_dd2(const Params &, const Truncation &);
Sides build_dd3(const Params &, const Truncation &);

Sides build_liu(const Params &, const Truncation &);
Sides build_agarwal(const Params &, const Truncation &);
Sides build_main1(const Params &, const Truncation &);
Sides build_main2(const Params &, const Truncation &);
Sides build_apm1(const Params &, const Truncation &);
Sides build_p1(const Params &, const Truncation &);
Sides build_m123(const Params &, const Truncation &);
Sides build_main3(const Params &, const Truncation &);
Sides build_m23(const Params &, const Truncation &);

Sides build_vh84(const Params &, const Truncation &);
Sides build_bs(const Params &, const Truncation &);
Sides build_gvh(const Params &, const Truncation &);
Sides build_gvhser(const Params &, const Truncation &);

} // namespace qdiv::kit
