#include "frobcy/classify.hpp"

#include "frobcy/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace frobcy {

namespace {

bool within_two_p32(const mpz_class& x, unsigned long p)
{
    return x * x <= 4 * ipow(p, 3);
}

}  // namespace

Classification classify_point(const mpz_class& a, const mpz_class& b, unsigned long p, bool at_symbol_root)
{
    Classification c;
    const mpz_class pp = p;
    const mpz_class p3 = ipow(p, 3);
    // (1 + alpha T + p^3 T^2)(1 + beta T + p^3 T^2)
    mpz_class disc = a * a - 4 * (b * pp - 2 * p3);
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
        mpz_class al = a + r, be = a - r;
        if (mpz_even_p(al.get_mpz_t())) {
            al /= 2;
            be /= 2;
            if (within_two_p32(al, p) && within_two_p32(be, p)) {
                c.status = Status::Reducible;
                c.alpha = al;
                c.beta = be;
                return c;
            }
        }
    }
    // (1 - chi p T)(1 - chi p^2 T)(1 - a_p T + p^3 T^2)
    if (at_symbol_root)
        for (int chi : {1, -1}) {
            mpz_class ap = -a - chi * (pp + pp * pp);
            if (b * pp == 2 * p3 + chi * (pp + pp * pp) * ap && within_two_p32(ap, p)) {
                c.status = Status::Singular;
                c.chi = chi;
                c.ap = ap;
                return c;
            }
        }
    c.status = weil_verify(a, b, p) ? Status::Smooth : Status::Inconsistent;
    return c;
}

int EtaProduct::weight2() const
{
    int w = 0;
    for (auto [m, e] : factors)
        w += e;
    return w;
}

long EtaProduct::leading_power() const
{
    long s = 0;
    for (auto [m, e] : factors)
        s += static_cast<long>(m) * e;
    if (s % 24 != 0)
        throw BadInput("eta product with non-integral leading exponent");
    return s / 24;
}

std::vector<mpz_class> eta_expand(const EtaProduct& e, std::size_t N)
{
    const long lead = e.leading_power();
    std::vector<mpz_class> prod(N + 1, 0);
    prod[0] = 1;
    auto mul = [&](const std::vector<mpz_class>& f) {
        std::vector<mpz_class> r(N + 1, 0);
        for (std::size_t i = 0; i <= N; ++i) {
            if (prod[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= N; ++j)
                if (f[j] != 0)
                    r[i + j] += prod[i] * f[j];
        }
        prod = std::move(r);
    };
    for (auto [m, ex] : e.factors) {
        // prod_n (1 - q^(mn)) by the pentagonal number theorem
        std::vector<mpz_class> f(N + 1, 0);
        for (long k = 0;; ++k) {
            bool any = false;
            const std::vector<long> ks = k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k};
            for (long kk : ks) {
                long pent = kk * (3 * kk - 1) / 2;
                std::size_t deg = static_cast<std::size_t>(pent) * m;
                if (deg <= N) {
                    f[deg] += (k % 2 ? -1 : 1);
                    any = true;
                }
            }
            if (!any)
                break;
        }
        if (ex < 0) {
            // power-series inverse, constant term 1
            std::vector<mpz_class> inv(N + 1, 0);
            inv[0] = 1;
            for (std::size_t n = 1; n <= N; ++n) {
                mpz_class acc = 0;
                for (std::size_t j = 1; j <= n; ++j)
                    acc -= f[j] * inv[n - j];
                inv[n] = acc;
            }
            f = std::move(inv);
        }
        for (int k = 0; k < std::abs(ex); ++k)
            mul(f);
    }
    std::vector<mpz_class> out(N + 1, 0);
    for (std::size_t i = 0; i <= N; ++i) {
        long idx = static_cast<long>(i) + lead;
        if (idx >= 0 && static_cast<std::size_t>(idx) <= N)
            out[idx] = prod[i];
    }
    return out;
}

std::optional<EtaProduct> builtin_eta(const std::string& label)
{
    if (label == "8/1")
        return EtaProduct{{{2, 4}, {4, 4}}};
    if (label == "9/1")
        return EtaProduct{{{3, 8}}};
    return std::nullopt;
}

std::optional<FormCoefficients> find_form(const std::string& label, const std::string& forms_dir)
{
    if (auto eta = builtin_eta(label)) {
        FormCoefficients f;
        f.label = label;
        f.weight = eta->weight2() / 2;
        auto c = eta_expand(*eta, 100);
        for (unsigned long p = 3; p <= 100; ++p)
            if (is_prime(p))
                f.ap[p] = c[p];
        return f;
    }
    std::string dir = forms_dir;
    if (dir.empty())
        if (const char* env = std::getenv("FROBCY_FORMS_DIR"))
            dir = env;
    if (dir.empty() || !std::filesystem::is_directory(dir))
        return std::nullopt;
    for (const auto& ent : std::filesystem::directory_iterator(dir)) {
        if (ent.path().extension() != ".json")
            continue;
        std::ifstream in(ent.path());
        std::stringstream ss;
        ss << in.rdbuf();
        nlohmann::json j = nlohmann::json::parse(ss.str(), nullptr, false);
        if (j.is_discarded() || !j.is_object() || j.value("label", std::string()) != label)
            continue;
        FormCoefficients f;
        f.label = label;
        f.weight = j.value("weight", 4);
        if (j.contains("ap") && j["ap"].is_object())
            for (auto it = j["ap"].begin(); it != j["ap"].end(); ++it) {
                const auto& v = it.value();
                f.ap[std::stoul(it.key())] = mpz_class(v.is_string() ? v.get<std::string>() : v.dump());
            }
        return f;
    }
    return std::nullopt;
}

std::optional<unsigned long> reduce_point(const mpq_class& point, unsigned long p)
{
    mpz_class den = point.get_den() % p;
    if (den == 0)
        return std::nullopt;
    mpz_class inv, mod = p;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class z = point.get_num() * inv;
    mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
    return mpz_get_ui(z.get_mpz_t());
}

MatchReport match_singular_ap(const CatalogEntry& entry, const mpq_class& point,
                              const std::vector<FrobeniusResult>& results, const std::string& forms_dir)
{
    const FormAnnotation* ann = nullptr;
    for (const auto& f : entry.forms)
        if (f.point == point)
            ann = &f;
    if (!ann || ann->form.empty())
        throw NoFixture(entry.name + " has no modular form annotated at " + point.get_str());
    auto form = find_form(ann->form, forms_dir);
    if (!form)
        throw NoFixture("no coefficients available for form " + ann->form);

    MatchReport rep;
    rep.entry = entry.name;
    rep.point = point;
    rep.form = ann->form;
    for (const auto& r : results) {
        if (r.status != Status::Singular || !r.ap)
            continue;
        auto z = reduce_point(point, r.p);
        if (!z || *z != r.z)
            continue;
        auto it = form->ap.find(r.p);
        if (it == form->ap.end())
            continue;
        rep.rows.push_back({r.p, r.z, *r.ap, it->second, *r.ap == it->second});
    }
    if (rep.rows.size() < 2)
        throw BadInput("need singular results at two or more primes for " + entry.name + " at " + point.get_str());
    rep.all_equal = true;
    for (const auto& row : rep.rows)
        rep.all_equal = rep.all_equal && row.equal;
    return rep;
}

}  // namespace frobcy
