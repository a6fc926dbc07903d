#include "frobcy/catalog.hpp"

#include "frobcy/errors.hpp"

#include <json.hpp>

#include <mutex>

namespace frobcy {

namespace {

#include "reference_data.inc"

RatPoly lin(long a, long b)
{
    return RatPoly(std::vector<mpq_class>{b, a});
}

RatPoly quad(long a, long b, long c)
{
    return RatPoly(std::vector<mpq_class>{c, b, a});
}

RatPoly theta_pow(unsigned k)
{
    return RatPoly::monomial(k);
}

ThetaOperator second(const std::string& name, RatPoly p1, RatPoly p2 = RatPoly())
{
    std::vector<RatPoly> rows{theta_pow(2), std::move(p1)};
    if (!p2.is_zero())
        rows.push_back(std::move(p2));
    return ThetaOperator::from_polys(rows, name);
}

// theta^2 - x(a theta^2 + a theta + b) - c x^2 (theta+1)^2
ThetaOperator three_term(const std::string& name, long a, long b, long c)
{
    return second(name, -quad(a, a, b), lin(1, 1) * lin(1, 1) * mpq_class(-c));
}

std::vector<SecondOrderEntry> build_second_order()
{
    std::vector<SecondOrderEntry> v;
    auto add = [&](ThetaOperator op, std::string formula, std::optional<ThetaOperator> fix = std::nullopt) {
        std::string name = op.name();
        v.push_back({name, std::move(op), std::move(fix), {name, std::move(formula)}});
    };
    add(second("A", lin(2, 1) * lin(2, 1) * mpq_class(-4)), "(2n)!^2/n!^4");
    add(second("B", lin(3, 1) * lin(3, 2) * mpq_class(-3)), "(3n)!/n!^3");
    add(second("C", lin(4, 1) * lin(4, 3) * mpq_class(-4)), "(4n)!/((2n)! n!^2)");
    add(second("D", lin(6, 1) * lin(6, 5) * mpq_class(-12)), "(6n)!/((3n)! (2n)! n!)");
    add(three_term("e", 32, 12, -256), "16^n sum_k (-1)^k C(-1/2,k) C(-1/2,n-k)^2");
    add(three_term("h", 54, 21, -729), "27^n sum_k (-1)^k C(-2/3,k) C(-1/3,n-k)^2");
    add(three_term("i", 128, 52, -4096), "64^n sum_k (-1)^k C(-3/4,k) C(-1/4,n-k)^2");
    add(three_term("j", 864, 372, -18664), "432^n sum_k (-1)^k C(-5/6,k) C(-1/6,n-k)^2",
        three_term("j", 864, 372, -186624));
    add(three_term("a", 7, 2, 8), "sum_k C(n,k)^3");
    add(three_term("c", 10, 3, -9), "sum_k C(n,k)^2 C(2k,k)");
    add(three_term("g", 17, 6, -72), "sum_{i,j} 8^(n-i) (-1)^i C(n,i) C(i,j)^3");
    add(three_term("d", 12, 4, -32), "sum_k C(n,k) C(2k,k) C(2n-2k,n-k)");
    add(three_term("f", 9, 3, -27), "sum_k (-1)^k 3^(n-3k) C(n,3k) (3k)!/k!^3");
    add(three_term("b", 11, 3, 1), "sum_k C(n,k)^2 C(n+k,n)");
    return v;
}

mpz_class binom(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class fac(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class upow(unsigned long b, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

struct MoebiusData {
    unsigned long base, s, a, b;  // base^n sum (-1)^k C(-a/s,k) C(-b/s,n-k)^2
};

// prod_{t<k} (a + t s) for k = 0..n
std::vector<mpz_class> rising(unsigned long a, unsigned long s, unsigned long n)
{
    std::vector<mpz_class> r(n + 1);
    r[0] = 1;
    for (unsigned long k = 1; k <= n; ++k)
        r[k] = r[k - 1] * (a + (k - 1) * s);
    return r;
}

// With C(-a/s,k) = (-1)^k R_k(a)/(s^k k!) the sum times s^(2n) n!^2 is
// sum_k R_k(a) R_{n-k}(b)^2 s^k C(n,k) n!/(n-k)!.
mpz_class moebius_term(const MoebiusData& m, unsigned long n)
{
    auto ra = rising(m.a, m.s, n);
    auto rb = rising(m.b, m.s, n);
    mpz_class nf = fac(n);
    mpz_class total = 0, t;
    for (unsigned long k = 0; k <= n; ++k) {
        t = ra[k] * rb[n - k] * rb[n - k];
        t *= upow(m.s, k);
        t *= binom(n, k);
        t *= nf / fac(n - k);
        total += t;
    }
    mpz_class num = upow(m.base, n) * total;
    mpz_class den = upow(m.s, 2 * n) * nf * nf;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw NonIntegral("closed form is not an integer at n = " + std::to_string(n));
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return num;
}

std::optional<MoebiusData> moebius(const std::string& name)
{
    if (name == "e")
        return MoebiusData{16, 2, 1, 1};
    if (name == "h")
        return MoebiusData{27, 3, 2, 1};
    if (name == "i")
        return MoebiusData{64, 4, 3, 1};
    if (name == "j")
        return MoebiusData{432, 6, 5, 1};
    return std::nullopt;
}

mpz_class franel(unsigned long i)
{
    mpz_class s = 0, b;
    for (unsigned long j = 0; j <= i; ++j) {
        b = binom(i, j);
        s += b * b * b;
    }
    return s;
}

mpz_class term_g(unsigned long n, const std::vector<mpz_class>* inner)
{
    mpz_class s = 0;
    for (unsigned long i = 0; i <= n; ++i) {
        mpz_class t = upow(8, n - i) * binom(n, i) * (inner ? (*inner)[i] : franel(i));
        if (i % 2)
            s -= t;
        else
            s += t;
    }
    return s;
}

mpz_class term_simple(const std::string& name, unsigned long n)
{
    if (name == "A") {
        mpz_class b = binom(2 * n, n);
        return b * b;
    }
    if (name == "B")
        return fac(3 * n) / (fac(n) * fac(n) * fac(n));
    if (name == "C")
        return fac(4 * n) / (fac(2 * n) * fac(n) * fac(n));
    if (name == "D")
        return fac(6 * n) / (fac(3 * n) * fac(2 * n) * fac(n));
    mpz_class s = 0, b;
    if (name == "a") {
        for (unsigned long k = 0; k <= n; ++k) {
            b = binom(n, k);
            s += b * b * b;
        }
        return s;
    }
    if (name == "c") {
        for (unsigned long k = 0; k <= n; ++k) {
            b = binom(n, k);
            s += b * b * binom(2 * k, k);
        }
        return s;
    }
    if (name == "d") {
        for (unsigned long k = 0; k <= n; ++k)
            s += binom(n, k) * binom(2 * k, k) * binom(2 * n - 2 * k, n - k);
        return s;
    }
    if (name == "f") {
        for (unsigned long k = 0; 3 * k <= n; ++k) {
            mpz_class t = upow(3, n - 3 * k) * binom(n, 3 * k) * (fac(3 * k) / (fac(k) * fac(k) * fac(k)));
            if (k % 2)
                s -= t;
            else
                s += t;
        }
        return s;
    }
    if (name == "b") {
        for (unsigned long k = 0; k <= n; ++k) {
            b = binom(n, k);
            s += b * b * binom(n + k, n);
        }
        return s;
    }
    if (name == "g")
        return term_g(n, nullptr);
    throw BadInput("unknown sequence " + name);
}

struct Factor {
    const char* name;
    RatPoly h;   // x^1 part
    RatPoly h2;  // x^2 part
};

struct Zagier {
    const char* name;
    RatPoly z;
};

struct ProductSpec {
    const char* name;
    int aesz;
    long k1;
    long k2;
};

std::vector<CatalogEntry> build_catalog()
{
    const std::vector<Factor> hyper = {
        {"A", lin(2, 1) * lin(2, 1), lin(2, 1) * lin(2, 1) * lin(2, 3) * lin(2, 3)},
        {"B", lin(3, 1) * lin(3, 2), lin(3, 1) * lin(3, 2) * lin(3, 4) * lin(3, 5)},
        {"C", lin(4, 1) * lin(4, 3), lin(4, 1) * lin(4, 3) * lin(4, 5) * lin(4, 7)},
        {"D", lin(6, 1) * lin(6, 5), lin(6, 1) * lin(6, 5) * lin(6, 7) * lin(6, 11)},
    };
    const std::vector<Zagier> zag = {
        {"a", quad(7, 7, 2)},  {"b", quad(11, 11, 3)}, {"c", quad(10, 10, 3)},
        {"d", quad(3, 3, 1)},  {"f", quad(3, 3, 1)},   {"g", quad(17, 17, 6)},
    };
    const std::vector<ProductSpec> specs = {
        {"A*a", 45, 4, -128},   {"B*a", 15, 3, -72},    {"C*a", 68, 4, -128},   {"D*a", 62, 12, -1152},
        {"A*b", 25, 4, -16},    {"B*b", 24, 3, -9},     {"C*b", 51, 4, -16},    {"D*b", 63, 12, -144},
        {"A*c", 58, 4, 144},    {"B*c", 70, 3, 81},     {"C*c", 69, 4, 144},    {"D*c", 64, 12, 1296},
        {"A*d", 36, 16, 512},   {"B*d", 48, 12, 288},   {"C*d", 38, 16, 512},   {"D*d", 65, 48, 4608},
        {"A*f", 133, 12, 432},  {"B*f", 134, 9, 243},   {"C*f", 135, 12, 432},  {"D*f", 136, 36, 3888},
        {"A*g", 137, 4, 1152},  {"B*g", 138, 3, 648},   {"C*g", 139, 4, 1152},  {"D*g", 140, 12, 10368},
    };
    struct FormRow {
        const char* name;
        long n1, d1;
        const char *f1, *t1;
        long n2, d2;
        const char *f2, *t2;
    };
    // B*a's second point is printed as 1/126; the leading symbol vanishes at 1/216.
    const std::vector<FormRow> form_rows = {
        {"A*a", -1, 16, "8/1", "", 1, 128, "64/5", "8/1"},
        {"B*a", -1, 27, "27/2", "27/1", 1, 216, "54/2", ""},
        {"C*a", -1, 64, "32/3", "32/2", 1, 512, "256/3", ""},
        {"D*a", -1, 432, "216/4", "216/2", 1, 3456, "1728/16", "216/1"},
        {"A*c", 1, 144, "48/1", "24/1", 1, 16, "16/1", "8/1"},
        {"B*c", 1, 243, "243/1", "", 1, 27, "27/1", ""},
        {"C*c", 1, 576, "576/3", "94/4", 1, 64, "64/3", "32/2"},
        {"D*c", 1, 3888, "", "1944/5", 1, 432, "432/9", "216/2"},
        {"A*d", 1, 128, "64/4", "32/1", 1, 64, "32/2", ""},
        {"B*d", 1, 216, "9/1", "", 1, 108, "108/4", "108/2"},
        {"C*d", 1, 512, "256/1", "", 1, 256, "128/4", "128/1"},
        {"D*d", 1, 3456, "576/8", "288/1", 1, 1728, "864/3", "864/1"},
        {"A*g", 1, 144, "24/1", "", 1, 128, "64/1", "8/1"},
        {"B*g", 1, 243, "243/2", "243/1", 1, 216, "54/4", "54/2"},
        {"C*g", 1, 576, "288/10", "96/4", 1, 512, "256/4", "256/3"},
        {"D*g", 1, 3888, "1944/6", "1944/5", 1, 3456, "1728/15", ""},
    };

    std::vector<CatalogEntry> out;
    for (const auto& s : specs) {
        std::string name = s.name;
        const Factor& h = hyper[std::string("ABCD").find(name[0])];
        const Zagier* z = nullptr;
        for (const auto& cand : zag)
            if (name[2] == cand.name[0])
                z = &cand;
        std::vector<RatPoly> rows{theta_pow(4), h.h * z->z * mpq_class(-s.k1), h.h2 * mpq_class(s.k2)};
        CatalogEntry e;
        e.name = name;
        e.aesz = s.aesz;
        e.op = ThetaOperator::from_polys(rows, name, s.aesz);
        e.hypergeometric_factor = std::string(1, name[0]);
        e.zagier_factor = std::string(1, name[2]);
        e.singular_locus = leading_symbol(e.op);
        for (const auto& f : form_rows)
            if (name == f.name) {
                e.forms.push_back({mpq_class(f.n1, f.d1), f.f1, f.t1});
                e.forms.push_back({mpq_class(f.n2, f.d2), f.f2, f.t2});
            }
        out.push_back(std::move(e));
    }
    return out;
}

using Rows = std::map<unsigned long, std::vector<std::string>>;

const std::map<std::string, Rows>& reference_tables_data()
{
    static const std::map<std::string, Rows> data = [] {
        std::map<std::string, Rows> m;
        auto j = nlohmann::json::parse(kReferenceJson);
        for (auto it = j.begin(); it != j.end(); ++it) {
            Rows rows;
            for (auto r = it.value()["rows"].begin(); r != it.value()["rows"].end(); ++r)
                rows[std::stoul(r.key())] = r.value().get<std::vector<std::string>>();
            m[it.key()] = std::move(rows);
        }
        return m;
    }();
    return data;
}

}  // namespace

const std::vector<SecondOrderEntry>& second_order_catalog()
{
    static const std::vector<SecondOrderEntry> v = build_second_order();
    return v;
}

const SecondOrderEntry& second_order(const std::string& name)
{
    for (const auto& e : second_order_catalog())
        if (e.name == name)
            return e;
    throw BadInput("unknown second-order operator " + name);
}

const SequenceRule& sequence_rule(const std::string& name)
{
    return second_order(name).rule;
}

mpz_class sequence_term(const SequenceRule& rule, unsigned long n)
{
    if (auto m = moebius(rule.name))
        return moebius_term(*m, n);
    return term_simple(rule.name, n);
}

std::vector<mpz_class> sequence_terms(const SequenceRule& rule, std::size_t N)
{
    std::vector<mpz_class> out(N + 1);
    if (rule.name == "g") {
        std::vector<mpz_class> inner(N + 1);
        for (std::size_t i = 0; i <= N; ++i)
            inner[i] = franel(i);
        for (std::size_t n = 0; n <= N; ++n)
            out[n] = term_g(n, &inner);
        return out;
    }
    for (std::size_t n = 0; n <= N; ++n)
        out[n] = sequence_term(rule, n);
    return out;
}

std::vector<mpz_class> sequence_values(const std::string& name, std::size_t N)
{
    const auto& e = second_order(name);
    return solve_series(e.corrected ? *e.corrected : e.op, N).coeffs;
}

std::vector<mpz_class> hadamard_product(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g,
                                        std::size_t N)
{
    if (f.size() < N + 1 || g.size() < N + 1)
        throw LengthMismatch("hadamard product needs " + std::to_string(N + 1) + " terms of each factor");
    std::vector<mpz_class> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        out[n] = f[n] * g[n];
    return out;
}

std::vector<mpz_class> quintic_wedge_coefficients(std::size_t N)
{
    std::vector<mpq_class> h(5 * N + 1, mpq_class(0));
    for (std::size_t k = 1; k <= 5 * N; ++k)
        h[k] = h[k - 1] + mpq_class(1, k);
    std::vector<mpz_class> c(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        mpz_class f = fac(k);
        mpz_class f5 = f * f;
        f5 *= f5 * f;
        c[k] = fac(5 * k) / f5;
    }
    std::vector<mpz_class> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            std::size_t m = n - k;
            mpq_class bracket = 1 + mpq_class(static_cast<unsigned long>(k)) *
                                        (5 * (h[m] - h[k] + h[5 * k] - h[5 * m]));
            acc += mpq_class(c[k] * c[m]) * bracket;
        }
        if (acc.get_den() != 1)
            throw NonIntegral("A_" + std::to_string(n) + " is not an integer");
        out[n] = acc.get_num();
    }
    return out;
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> v = build_catalog();
    return v;
}

const CatalogEntry& catalog_entry(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name)
            return e;
    throw BadInput("unknown catalog operator " + name);
}

const std::map<unsigned long, std::vector<std::string>>& reference_rows(const std::string& name)
{
    auto it = reference_tables_data().find(name);
    if (it == reference_tables_data().end())
        throw BadInput("no reference table for " + name);
    return it->second;
}

bool has_reference_table(const std::string& name)
{
    return reference_tables_data().count(name) > 0;
}

}  // namespace frobcy
