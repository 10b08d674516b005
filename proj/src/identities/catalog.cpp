#include <qdiv/errors.hpp>
#include <qdiv/identities.hpp>

#include <algorithm>
#include <sstream>

#include "kit.hpp"

namespace qdiv
{

namespace
{

using namespace kit;

constexpr Var q = Var::q;
constexpr Var p = Var::p;
constexpr Var x = Var::x;
constexpr Var z = Var::z;
constexpr Var a = Var::a;
constexpr Var t = Var::t;

// Caps used by the default sweeps.
const Truncation finite_q{{q, 40}};
const Truncation finite_qx{{q, 40}, {x, 8}};
const Truncation finite_qz{{q, 40}, {z, 8}};
const Truncation finite_pq{{q, 40}, {p, 20}};
const Truncation finite_pqx{{q, 40}, {p, 20}, {x, 8}};
const Truncation infinite_q{{q, 36}};
const Truncation infinite_aq{{q, 36}, {a, 6}};
const Truncation infinite_apq{{q, 36}, {p, 12}, {a, 6}};
const Truncation infinite_pq{{q, 36}, {p, 12}};
const Truncation infinite_xtq{{q, 36}, {x, 6}, {t, 6}};
const Truncation sym_caps{{q, 36}, {p, 12}, {a, 6}, {z, 6}, {x, 6}};
const Truncation star_caps{{q, 8}, {x, 8}, {z, 8}};

ParamRanges seeds(ParamRanges r)
{
    r["seed"] = {1, 20};
    return r;
}

std::vector<IdentityInfo> make_catalog()
{
    using Id = IdentityId;
    std::vector<IdentityInfo> c = {
        {Id::U81, "U81", "Kluyver", {}, "", "q^{k(k+1)/2}",
         "sum_{k>=1} (-1)^{k-1} q^{k(k+1)/2} / ((q;q)_k (1-q^k)) = sum_{k>=1} q^k/(1-q^k)", {}, infinite_q,
         build_u81},
        {Id::HAMME, "HAMME", "Van Hamme", {"n"}, "n >= 0", "",
         "sum_{k=1}^n (-1)^{k-1} [n,k] q^{k(k+1)/2}/(1-q^k) = sum_{k=1}^n q^k/(1-q^k)", {{"n", {1, 8}}}, finite_q,
         build_hamme},
        {Id::UCH, "UCH", "Uchimura", {"m", "n"}, "m, n >= 0", "",
         "sum_{k=1}^n (-1)^{k-1} [n,k] q^{k(k+1)/2}/(1-q^{k+m}) = sum_{k=1}^n q^k/((1-q^k) [k+m,m])",
         {{"m", {0, 4}}, {"n", {1, 6}}}, finite_q, build_uch},
        {Id::DILCH, "DILCH", "Dilcher", {"m", "n"}, "m >= 0, n >= 1", "",
         "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)+km}/(1-q^k)^m = h_m(q/(1-q), ..., q^n/(1-q^n))",
         {{"m", {0, 4}}, {"n", {1, 5}}}, finite_q, build_dilch},
        {Id::PRODINGER, "PRODINGER", "Prodinger", {"m", "n"}, "0 <= m <= n", "",
         "sum_{k!=m} (-1)^{k-1} [n,k] q^{k(k+1)/2}/(1-q^{k-m}) = (-1)^m q^{m(m+1)/2} [n,m] sum_{k!=m} "
         "q^{k-m}/(1-q^{k-m})",
         {{"m", {0, 5}}, {"n", {0, 5}}}, finite_q, build_prodinger},
        {Id::FLZ, "FLZ", "common generalisation of Dilcher", {"i", "m", "n"}, "1 <= i <= n, m >= 1", "",
         "sum_{k=i}^n (-1)^{k-i} [n,k][k,i] q^{C(k-i,2)+km}/(1-zq^k)^m "
         "= q^i (q;q)_n/((q;q)_i (zq^i;q)_{n-i+1}) h_{m-1}(q^i/(1-zq^i), ..., q^n/(1-zq^n))",
         {{"i", {1, 4}}, {"m", {1, 4}}, {"n", {1, 4}}}, finite_qz, build_flz},
        {Id::NEW, "NEW", "bibasic transformation", {"m", "n", "r"}, "m, n >= 0, 0 <= r <= m", "",
         "sum_k (-1)^k p^{C(k+1,2)-rk}/((p;p)_k (p;p)_{m-k} (xp^k;q)_{n+1}) = x^r sum_k (-1)^k "
         "q^{C(k+1,2)+rk}/((q;q)_k (q;q)_{n-k} (xq^k;p)_{m+1})",
         {{"m", {0, 4}}, {"n", {0, 4}}, {"r", {0, 4}}}, finite_pqx, build_new},
        {Id::LIU, "LIU", "Liu", {}, "", "a^n q^{n^2}",
         "sum_{n>=1} aq^n/(1-aq^n) = sum_{n>=1} (1-aq^{2n}) a^n q^{n^2}/((1-q^n)(1-aq^n))", {}, infinite_aq,
         build_liu},
        {Id::AGARWAL, "AGARWAL", "Agarwal", {}, "", "x^n t^n q^{n^2}",
         "sum_{n>=0} t^n/(1-xq^n) = sum_{n>=0} (1-xtq^{2n}) x^n t^n q^{n^2}/((1-xq^n)(1-tq^n))", {}, infinite_xtq,
         build_agarwal},
        {Id::MAIN1, "MAIN1", "Carlitz-Eulerian Lambert expansion", {"m"}, "m >= 0", "a^n p^{kn} q^{n^2}",
         "sum a[n]_p^m q^n/(1-aq^n) expanded with A_k(q^n;p)/(q^n;p)_{k+1}", {{"m", {0, 3}}}, infinite_apq,
         build_main1},
        {Id::MAIN2, "MAIN2", "Eulerian Lambert expansion", {"m"}, "m >= 0", "a^n q^{n^2}",
         "sum a n^m q^n/(1-aq^n) expanded with A_k(q^n)/(1-q^n)^{k+1}", {{"m", {0, 4}}}, infinite_aq,
         build_main2},
        {Id::NEWPF, "NEWPF", "double-sum form", {"m", "n", "r"}, "m, n >= 0, 0 <= r <= m", "x^{r+j}",
         "left side of NEW = sum_{j>=0} x^{r+j} [m+j,m]_p [n+r+j,n]_q",
         {{"m", {0, 4}}, {"n", {0, 4}}, {"r", {0, 4}}}, finite_pqx, build_newpf},
        {Id::DD1, "DD1", "divided difference of 1/(y-a)", {"n", "seed"}, "n >= 0", "",
         "1/(y-a_0) d_0...d_{n-1} = 1/prod_{i<=n} (y-a_i)", seeds({{"n", {0, 3}}}), {}, build_dd1},
        {Id::DD2, "DD2", "divided difference of b^r/(b-a)", {"m", "r", "seed"}, "0 <= r <= m", "",
         "b_0^r/(b_0-a_0) d_0...d_{m-1} = -a_0^r/prod_{j<=m} (a_0-b_j)", seeds({{"m", {0, 3}}, {"r", {0, 3}}}), {},
         build_dd2},
        {Id::DD3, "DD3", "divided-difference exchange", {"m", "n", "r", "seed"}, "m, n >= 0, 0 <= r <= m", "",
         "f(b_0)/prod(b_0-a_i) d^B_0...d^B_{m-1} = -f(a_0)/prod(a_0-b_j) d^A_0...d^A_{n-1}, deg f = r",
         seeds({{"m", {0, 3}}, {"n", {0, 3}}, {"r", {0, 3}}}), {}, build_dd3},
        {Id::STAR, "STAR", "partial fractions", {"n"}, "n >= 0", "",
         "x^n q^{C(n+1,2)} = sum_k (-1)^k q^{C(n-k,2)} prod_{i!=k+1} (z-xq^i)/((q;q)_k (q;q)_{n-k})",
         {{"n", {0, 4}}}, star_caps, build_star},
        {Id::NEW2, "NEW2", "symmetric bibasic form", {"m", "n"}, "m, n >= 0", "",
         "sum_k (-1)^k p^{C(k+1,2)}/((p;p)_k (p;p)_{m-k} (xp^k;q)_{n+1}) is symmetric under (m,p) <-> (n,q)",
         {{"m", {0, 4}}, {"n", {0, 4}}}, finite_pqx, build_new2},
        {Id::SYM, "SYM", "infinite symmetric form", {}, "", "k > cap(a) + s, s(s+1)/2 <= cap(p)",
         "(a;p)_inf/(p;p)_inf sum_k prod_{j<k}(a-p^{j+1}) (xbp^k;q)_inf/((p;p)_k (xp^k;q)_inf) is symmetric "
         "under (a,p) <-> (b,q); b is the variable z",
         {}, sym_caps, build_sym},
        {Id::QSQ, "QSQ", "base q^2 specialisation", {}, "", "q^{k(k+1)}",
         "sum (-1)^k (q;q^2)_{k+1} q^{k(k+1)} = sum q^{(2k+1)k}/(q;q^2)_k - (q^2;q^2)_inf/(q;q^2)_inf sum "
         "q^{(2k+1)(k+1)}/(q^2;q^2)_k",
         {}, infinite_q, build_qsq},
        {Id::NEWNEW, "NEWNEW", "x = 1 limit", {"m", "n", "r"}, "m, n >= 0, -n <= r <= m", "",
         "k >= 1 parts of NEW at x = 1 = (-r + sum_k q^k/(1-q^k) - sum_k p^k/(1-p^k))/((p;p)_m (q;q)_n)",
         {{"m", {0, 4}}, {"n", {0, 4}}, {"r", {-4, 4}}}, finite_pq, build_newnew},
        {Id::MNPQ, "MNPQ", "m = n, p = q case", {"n", "r"}, "n >= 0, |r| <= n", "",
         "sum_k (-1)^{k-1} (q^{C(k+1,2)-rk} - q^{C(k+1,2)+rk})/((q;q)_k (q;q)_{n-k} (q^k;q)_{n+1}) = r/(q;q)_n^2",
         {{"n", {0, 4}}, {"r", {-4, 4}}}, finite_q, build_mnpq},
        {Id::CORNEW, "CORNEW", "bibasic harmonic form", {"m", "n"}, "m, n >= 0", "", "NEWNEW at r = 0",
         {{"m", {0, 4}}, {"n", {0, 4}}}, finite_pq, build_cornew},
        {Id::LONG, "LONG", "p = q^2, m = n case", {"n"}, "n >= 0", "",
         "NEWNEW at r = 0, p = q^2, m = n, with right side sum q^k/(1-q^{2k}) / ((q^2;q^2)_n (q;q)_n)",
         {{"n", {0, 4}}}, finite_q, build_long},
        {Id::LONGINF, "LONGINF", "odd divisors, infinite form", {}, "", "q^k",
         "n -> infinity limit of LONG: the odd-divisor series as a combination of three infinite sums", {},
         infinite_q, build_longinf},
        {Id::ODDDIV, "ODDDIV", "odd divisors", {}, "", "q^k",
         "sum_{k>=1} q^k/(1-q^{2k}) = sum_{k>=1} q^{2k-1}/(1-q^{2k-1})", {}, infinite_q, build_odddiv},
        {Id::UCH001, "UCH001", "first Uchimura generalisation", {"m", "n", "r"}, "m, n >= 0, 0 <= r <= m", "",
         "NEW at p = q, k >= 1 parts, against (-[r]_x + T_n - x^r T_m)/((q;q)_m (q;q)_n), T_n = sum_{k<=n} "
         "q^k (q;q)_{k-1}/(xq;q)_k",
         {{"m", {0, 4}}, {"n", {0, 4}}, {"r", {0, 4}}}, finite_qx, build_uch001},
        {Id::UCH002, "UCH002", "second Uchimura generalisation", {"m", "n"}, "m, n >= 0", "",
         "sum_{k=1}^m (-1)^k q^{nk+C(k+1,2)}/(...(xq^k;q)_{n+1}) - (m <-> n) = (T_n - T_m)/((q;q)_m (q;q)_n)",
         {{"m", {0, 4}}, {"n", {0, 4}}}, finite_qx, build_uch002},
        {Id::PF12, "PF12", "telescoping sum", {"n"}, "n >= 0", "",
         "(1-x) sum_{k=1}^n q^k (q;q)_{k-1}/(xq;q)_k = 1 - (q;q)_n/(xq;q)_n", {{"n", {0, 6}}}, finite_qx,
         build_pf12},
        {Id::PRODNEW, "PRODNEW", "shifted Prodinger", {"m", "n", "r"}, "0 <= m, r <= n", "",
         "PRODINGER with q^{C(k+1,2)-rk} and an extra term (-1)^m r q^{C(m+1,2)-rm} [n,m]",
         {{"m", {0, 5}}, {"n", {0, 5}}, {"r", {0, 5}}}, finite_q, build_prodnew},
        {Id::RDIV, "RDIV", "shifted Van Hamme", {"n", "r"}, "0 <= r <= n", "",
         "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k+1,2)-rk}/(1-q^k) = r + sum_{k=1}^n q^k/(1-q^k)",
         {{"n", {0, 8}}, {"r", {0, 8}}}, finite_q, build_rdiv},
        {Id::RU81, "RU81", "shifted Kluyver", {"r"}, "r >= 0", "q^{k(k+1)/2 - rk}, k >= r",
         "sum_{k>=1} (-1)^{k-1} q^{C(k+1,2)-rk}/((q;q)_k (1-q^k)) = r + sum_{k>=1} q^k/(1-q^k)", {{"r", {0, 4}}},
         infinite_q, build_ru81},
        {Id::DILCHNEW, "DILCHNEW", "shifted Dilcher", {"m", "n", "r"}, "m, n >= 1, 0 <= r <= m + n - 1", "",
         "sum_k (-1)^{k-1} [n,k] q^{C(k,2)+k(m-r)}/(1-q^k)^m = sum_j C(r, m-j) h_j(q/(1-q), ..., q^n/(1-q^n))",
         {{"m", {1, 3}}, {"n", {1, 4}}, {"r", {0, 6}}}, finite_q, build_dilchnew},
        {Id::DILCHCOR, "DILCHCOR", "shifted Dilcher, sum form", {"m", "n", "r"}, "m, n >= 1, 0 <= r <= m + n - 1",
         "", "DILCHNEW with each h_j replaced by its alternating q-binomial sum",
         {{"m", {1, 3}}, {"n", {1, 4}}, {"r", {0, 6}}}, finite_q, build_dilchcor},
        {Id::QBT1, "QBT1", "alternating q-binomial sum", {"n"}, "n >= 1", "",
         "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)} = 1", {{"n", {1, 10}}}, finite_q, build_qbt1},
        {Id::APM1, "APM1", "a = 1 and a = -1 cases of MAIN1", {"m", "sign"}, "m >= 0, sign = 1 or -1",
         "p^{kn} q^{n^2}",
         "sign 1: sum [n]_p^m q^n/(1-q^n); sign -1: sum [n]_p^m q^n/(1+q^n), first right sum with "
         "(-1)^{n-1} (1+q^{2n})/(1-q^{2n})",
         {{"m", {0, 3}}, {"sign", {-1, 1}}}, infinite_pq, build_apm1},
        {Id::P1, "P1", "p = 1 case of APM1", {"m", "sign"}, "m >= 0, sign = 1 or -1", "q^{n^2}",
         "sum n^m q^n/(1 -+ q^n) expanded with A_k(q^n)/(1-q^n)^{k+1}", {{"m", {0, 4}}, {"sign", {-1, 1}}},
         infinite_q, build_p1},
        {Id::M123, "M123", "MAIN2 at m = 1, 2, 3", {"m"}, "m in {1, 2, 3}", "a^n q^{n^2}",
         "MAIN2 with A_1 = 1, A_2 = 1 + t, A_3 = 1 + 4t + t^2 written out", {{"m", {1, 3}}}, infinite_aq,
         build_m123},
        {Id::MAIN3, "MAIN3", "binomial Lambert expansion", {"m"}, "m >= 0", "a^n q^{n^2}",
         "sum C(n,m) aq^n/(1-aq^n) = sum C(n,m)(1-aq^{2n}) a^n q^{n^2}/((1-q^n)(1-aq^n)) + sum_k sum_n "
         "C(n,m-k) a^n q^{n(n+k)}/(1-q^n)^{k+1}",
         {{"m", {0, 3}}}, infinite_aq, build_main3},
        {Id::M23, "M23", "MAIN3 at m = 2, 3", {"m"}, "m in {2, 3}", "a^n q^{n^2}", "MAIN3 written out for m = 2, 3",
         {{"m", {2, 3}}}, infinite_aq, build_m23},
        {Id::VH84, "VH84", "Uchimura product form", {}, "", "q^m",
         "sum_{k>=1} q^k/(1-q^k) = sum_{m>=1} m q^m (q^{m+1};q)_inf", {}, infinite_q, build_vh84},
        {Id::BS, "BS", "d(n) = t(n)", {}, "", "", "sum d(n) q^n = sum t(n) q^n", {}, Truncation{{q, 60}},
         build_bs},
        {Id::GVH, "GVH", "d(n,N) = t(n,N) - t(n-N,N)", {"N"}, "N >= 1", "",
         "sum d(n,N) q^n = sum (t(n,N) - t(n-N,N)) q^n", {{"N", {1, 12}}}, finite_q, build_gvh},
        {Id::GVHSER, "GVHSER", "bounded divisor series", {"N"}, "N >= 1", "q^m",
         "sum_{k=1}^N q^k/(1-q^k) = sum_{m>=1} m q^m (q^{m+1};q)_{N-1} - sum_{m>=1} m q^{m+N} (q^{m+1};q)_{N-1}",
         {{"N", {1, 8}}}, infinite_q, build_gvhser},
    };
    return c;
}

} // namespace

const std::vector<IdentityInfo> &catalog()
{
    static const std::vector<IdentityInfo> table = make_catalog();
    return table;
}

const IdentityInfo &info(IdentityId id)
{
    return catalog().at(static_cast<std::size_t>(id));
}

std::optional<IdentityId> parse_identity(std::string_view name)
{
    for (const auto &entry : catalog()) {
        if (entry.name == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

std::string_view name_of(IdentityId id)
{
    return info(id).name;
}

std::string to_string(const Params &params)
{
    std::ostringstream out;
    bool first = true;
    for (const auto &[k, v] : params) {
        out << (first ? "" : ",") << k << '=' << v;
        first = false;
    }
    return out.str();
}

void validate(const IdentityInstance &inst)
{
    const auto &entry = info(inst.id);
    for (const auto &name : entry.params) {
        if (!inst.params.contains(name)) {
            throw InvalidParams(std::string(entry.name) + ": missing parameter '" + name + "'");
        }
    }
    for (const auto &[name, value] : inst.params) {
        if (std::find(entry.params.begin(), entry.params.end(), name) == entry.params.end()) {
            throw InvalidParams(std::string(entry.name) + ": unknown parameter '" + name + "'");
        }
    }
    // The builders own the constraints; a build in the empty box checks them
    // without doing series work.
    entry.build(inst.params, Truncation{});
}

} // namespace qdiv
