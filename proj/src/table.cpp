#include "frobcy/table.hpp"

#include "frobcy/catalog.hpp"
#include "frobcy/errors.hpp"
#include "frobcy/wedge.hpp"

#include <json.hpp>

#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

namespace frobcy {

OperatorPair make_pair_for(const ThetaOperator& P)
{
    ThetaOperator Q = wedge_square(P);
    return {P.name(), P, Q, leading_symbol(P)};
}

ThetaOperator resolve_operator(const std::string& name_or_file)
{
    for (const auto& e : catalog())
        if (e.name == name_or_file)
            return e.op;
    std::ifstream in(name_or_file);
    if (!in)
        throw BadInput("unknown operator or unreadable file: " + name_or_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ThetaOperator::from_json(ss.str());
}

bool is_symbol_root(const RatPoly& symbol, unsigned long p, unsigned long z)
{
    mpz_class acc = 0, mod = p;
    for (std::size_t i = symbol.coeffs().size(); i-- > 0;) {
        const mpq_class& c = symbol.coeffs()[i];
        mpz_class den = c.get_den() % mod;
        if (den == 0)
            throw BadInput("leading symbol has a denominator divisible by p");
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        acc = acc * z + c.get_num() * inv;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    return acc == 0;
}

unsigned row_precision(const RatPoly& symbol, unsigned long p)
{
    for (unsigned long z = 1; z < p; ++z)
        if (is_symbol_root(symbol, p, z))
            return required_precision(p, true);
    return required_precision(p, false);
}

FrobeniusResult compute_point(const OperatorPair& ops, const std::vector<mpz_class>& f0,
                              const std::vector<mpz_class>& F0, unsigned long p, unsigned long z, unsigned s)
{
    FrobeniusResult r;
    r.op = ops.name;
    r.p = p;
    r.z = z;
    r.symbol_root = is_symbol_root(ops.symbol, p, z);
    r.s = s ? s : required_precision(p, r.symbol_root);
    auto roots = unit_roots(f0, F0, p, z, r.s);
    if (!roots) {
        r.status = Status::Undefined;
        return r;
    }
    r.r1 = roots->f0.ratio;
    r.r1hat = roots->F0.ratio;
    auto [a, b] = assemble_frobenius(*r.r1, *r.r1hat, p, r.s);
    r.a = a;
    r.b = b;
    Classification c = classify_point(a, b, p, r.symbol_root);
    r.status = c.status;
    r.alpha = c.alpha;
    r.beta = c.beta;
    r.chi = c.chi;
    r.ap = c.ap;
    return r;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body)
{
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned k = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (k <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < k; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::vector<FrobeniusResult> compute_row(const OperatorPair& ops, unsigned long p, const TableOptions& opts)
{
    const unsigned s_row = opts.precision ? opts.precision : row_precision(ops.symbol, p);
    const std::size_t N = mpz_get_ui(ipow(p, s_row).get_mpz_t()) - 1;
    std::vector<mpz_class> f0, F0;
    parallel_for(2, opts.jobs, [&](std::size_t i) {
        if (i == 0)
            f0 = cache_series(ops.P, p, s_row, N, opts.cache_dir);
        else
            F0 = cache_series(ops.Q, p, s_row, N, opts.cache_dir);
    });
    std::vector<FrobeniusResult> row(p - 1);
    parallel_for(p - 1, opts.jobs,
                 [&](std::size_t i) { row[i] = compute_point(ops, f0, F0, p, i + 1, opts.precision); });
    return row;
}

std::string cell_text(const FrobeniusResult& r)
{
    if (r.status == Status::Undefined)
        return "-";
    std::string s = "(" + r.a.get_str() + "," + r.b.get_str() + ")";
    if (r.symbol_root)
        s += "*";
    else if (r.status == Status::Reducible)
        s += "'";
    return s;
}

std::string render_markdown(const std::string& op, unsigned long p, const std::vector<std::string>& cells)
{
    std::ostringstream os;
    os << "### " << op << " p=" << p << "\n\n| z |";
    for (unsigned long z = 1; z < p; ++z)
        os << " " << z << " |";
    os << "\n|---|";
    for (unsigned long z = 1; z < p; ++z)
        os << "---|";
    os << "\n|   |";
    for (const auto& c : cells)
        os << " " << c << " |";
    os << "\n";
    return os.str();
}

std::string csv_header()
{
    return "operator,p,z,status,a,b,alpha,beta,chi,ap,form\n";
}

std::string render_csv_row(const FrobeniusResult& r, const std::string& form)
{
    std::ostringstream os;
    const bool defined = r.status != Status::Undefined;
    os << r.op << "," << r.p << "," << r.z << "," << status_name(r.status) << ",";
    os << (defined ? r.a.get_str() : "") << "," << (defined ? r.b.get_str() : "") << ",";
    os << (r.alpha ? r.alpha->get_str() : "") << "," << (r.beta ? r.beta->get_str() : "") << ",";
    os << (r.chi ? std::to_string(*r.chi) : "") << "," << (r.ap ? r.ap->get_str() : "") << ",";
    os << form << "\n";
    return os.str();
}

std::string render_json(const std::vector<FrobeniusResult>& rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["operator"] = r.op;
        j["p"] = r.p;
        j["z"] = r.z;
        j["status"] = status_name(r.status);
        j["s"] = r.s;
        if (r.status != Status::Undefined) {
            j["a"] = r.a.get_str();
            j["b"] = r.b.get_str();
            j["r1"] = r.r1->residue().get_str();
            j["r1hat"] = r.r1hat->residue().get_str();
        }
        if (r.alpha) {
            j["alpha"] = r.alpha->get_str();
            j["beta"] = r.beta->get_str();
        }
        if (r.chi) {
            j["chi"] = *r.chi;
            j["ap"] = r.ap->get_str();
        }
        j["cell"] = cell_text(r);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace frobcy
