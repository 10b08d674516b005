// Divided-difference lemmas, evaluated at seeded random rational alphabets.
// Both sides come back as constant series.

#include "kit.hpp"

#include <random>
#include <set>

namespace qdiv::kit
{

namespace
{

// Distinct rationals avoiding everything in `taken`, which is updated.
std::vector<Rational> draw_alphabet(std::mt19937_64 &rng, std::size_t size, std::set<Rational> &taken)
{
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    std::vector<Rational> out;
    while (out.size() < size) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        if (taken.insert(v).second) {
            out.push_back(v);
        }
    }
    return out;
}

Rational eval_poly(const std::vector<Rational> &coeffs, const Rational &x)
{
    Rational r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

// f(u) / prod_i (u - w_i)
Rational ratio(const Rational &fu, const Rational &u, const std::vector<Rational> &ws)
{
    Rational den = 1;
    for (const auto &w : ws) {
        den *= u - w;
    }
    return fu / den;
}

Rational power(const Rational &x, long r)
{
    Rational v = 1;
    for (long i = 0; i < r; ++i) {
        v *= x;
    }
    return v;
}

Sides constants(const Rational &lhs, const Rational &rhs, const Truncation &tr)
{
    return Sides{constant(lhs, tr), constant(rhs, tr)};
}

std::mt19937_64 seeded(const Params &ps)
{
    return std::mt19937_64(static_cast<std::uint64_t>(param(ps, "seed")));
}

} // namespace

Sides build_dd1(const Params &ps, const Truncation &tr)
{
    const long n = param(ps, "n");
    require(n >= 0, "n >= 0");
    auto rng = seeded(ps);
    std::set<Rational> taken;
    const Rational y = draw_alphabet(rng, 1, taken).front();
    const auto alphabet = draw_alphabet(rng, static_cast<std::size_t>(n) + 1, taken);

    AlphabetFunction f = [y](std::span<const Rational> a) -> Rational { return Rational(1) / (y - a[0]); };
    const Rational lhs = divided_differences(f, static_cast<std::size_t>(n))(alphabet);
    Rational rhs = 1;
    for (const auto &ai : alphabet) {
        rhs /= y - ai;
    }
    return constants(lhs, rhs, tr);
}

Sides build_dd2(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long r = param(ps, "r");
    require(m >= 0 && 0 <= r && r <= m, "0 <= r <= m");
    auto rng = seeded(ps);
    std::set<Rational> taken;
    const Rational a1 = draw_alphabet(rng, 1, taken).front();
    const auto b = draw_alphabet(rng, static_cast<std::size_t>(m) + 1, taken);

    AlphabetFunction f = [a1, r](std::span<const Rational> bs) -> Rational {
        return power(bs[0], r) / (bs[0] - a1);
    };
    const Rational lhs = divided_differences(f, static_cast<std::size_t>(m))(b);
    return constants(lhs, -ratio(power(a1, r), a1, b), tr);
}

Sides build_dd3(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    const long r = param(ps, "r");
    require(m >= 0 && n >= 0 && 0 <= r && r <= m, "m, n >= 0, 0 <= r <= m");
    auto rng = seeded(ps);
    std::set<Rational> taken;
    const auto a = draw_alphabet(rng, static_cast<std::size_t>(n) + 1, taken);
    const auto b = draw_alphabet(rng, static_cast<std::size_t>(m) + 1, taken);
    // Random polynomial of exact degree r.
    std::vector<Rational> f;
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (long i = 0; i <= r; ++i) {
        f.emplace_back(coeff(rng));
    }
    if (sgn(f.back()) == 0) {
        f.back() = 1;
    }

    AlphabetFunction left = [&](std::span<const Rational> bs) -> Rational {
        return ratio(eval_poly(f, bs[0]), bs[0], a);
    };
    AlphabetFunction right = [&](std::span<const Rational> as) -> Rational {
        return -ratio(eval_poly(f, as[0]), as[0], b);
    };
    const Rational lhs = divided_differences(left, static_cast<std::size_t>(m))(b);
    const Rational rhs = divided_differences(right, static_cast<std::size_t>(n))(a);
    return constants(lhs, rhs, tr);
}

} // namespace qdiv::kit
