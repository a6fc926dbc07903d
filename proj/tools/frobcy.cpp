#include "frobcy/cache.hpp"
#include "frobcy/catalog.hpp"
#include "frobcy/classify.hpp"
#include "frobcy/congruence.hpp"
#include "frobcy/errors.hpp"
#include "frobcy/frobenius.hpp"
#include "frobcy/padic.hpp"
#include "frobcy/table.hpp"
#include "frobcy/wedge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace frobcy;
using json = nlohmann::ordered_json;

namespace {

// "3..17", "5,7,11" or a single prime.
std::vector<unsigned long> parse_primes(const std::string& spec)
{
    std::vector<unsigned long> out;
    auto add_range = [&](unsigned long lo, unsigned long hi) {
        for (unsigned long p = std::max(3ul, lo); p <= hi; ++p)
            if (is_prime(p))
                out.push_back(p);
    };
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                unsigned long p = std::stoul(part);
                if (!is_prime(p) || p == 2)
                    throw BadInput(part + " is not an odd prime");
                out.push_back(p);
            } else {
                add_range(std::stoul(part.substr(0, dots)), std::stoul(part.substr(dots + 2)));
            }
        } catch (const std::logic_error&) {
            throw BadInput("cannot parse prime list \"" + spec + "\"");
        }
    }
    if (out.empty())
        throw BadInput("no odd primes in \"" + spec + "\"");
    return out;
}

std::string form_for(const std::string& op, unsigned long p, unsigned long z)
{
    for (const auto& e : catalog()) {
        if (e.name != op)
            continue;
        for (const auto& f : e.forms) {
            auto r = reduce_point(f.point, p);
            if (r && *r == z)
                return f.form;
        }
    }
    return {};
}

json result_json(const FrobeniusResult& r)
{
    json j = json::parse(render_json({r}))[0];
    if (r.status != Status::Undefined) {
        const mpz_class p = r.p;
        const mpz_class c2 = r.b * p, c3 = r.a * p * p * p, c4 = ipow(r.p, 6);
        j["polynomial"] = json::array({"1", r.a.get_str(), c2.get_str(), c3.get_str(), c4.get_str()});
    }
    return j;
}

std::string cache_dir_for(bool no_cache, const std::string& dir)
{
    if (no_cache)
        return {};
    return dir.empty() ? default_cache_dir() : dir;
}

int run_table(const std::string& op_name, const std::string& primes, const std::string& format, unsigned jobs,
              bool no_cache, const std::string& cache_dir, unsigned precision, const std::string& output)
{
    OperatorPair ops = make_pair_for(resolve_operator(op_name));
    if (ops.name.empty())
        ops.name = op_name;
    TableOptions opts;
    opts.jobs = jobs;
    opts.cache_dir = cache_dir_for(no_cache, cache_dir);
    opts.precision = precision;

    std::ostringstream out;
    std::vector<FrobeniusResult> all;
    if (format == "csv")
        out << csv_header();
    for (unsigned long p : parse_primes(primes)) {
        auto row = compute_row(ops, p, opts);
        if (format == "markdown") {
            std::vector<std::string> cells;
            for (const auto& r : row)
                cells.push_back(cell_text(r));
            out << render_markdown(ops.name, p, cells) << "\n";
        } else if (format == "csv") {
            for (const auto& r : row)
                out << render_csv_row(r, r.status == Status::Singular ? form_for(ops.name, p, r.z) : "");
        }
        all.insert(all.end(), row.begin(), row.end());
    }
    if (format == "json")
        out << render_json(all) << "\n";

    if (output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(output);
        if (!(f << out.str()))
            throw BadInput("cannot write " + output);
    }
    return 0;
}

int run_frob(const std::string& op_name, unsigned long p, unsigned long z, unsigned precision, bool no_cache,
             const std::string& cache_dir)
{
    if (!is_prime(p) || p == 2)
        throw BadInput("--prime must be an odd prime");
    if (z % p == 0)
        throw BadInput("--point must be nonzero mod p");
    OperatorPair ops = make_pair_for(resolve_operator(op_name));
    if (ops.name.empty())
        ops.name = op_name;
    z %= p;
    const bool root = is_symbol_root(ops.symbol, p, z);
    const unsigned s = precision ? precision : required_precision(p, root);
    const std::size_t N = ipow(p, s).get_ui() - 1;
    const std::string dir = cache_dir_for(no_cache, cache_dir);
    auto f0 = cache_series(ops.P, p, s, N, dir);
    auto F0 = cache_series(ops.Q, p, s, N, dir);
    std::cout << result_json(compute_point(ops, f0, F0, p, z, s)).dump(2) << "\n";
    return 0;
}

int run_congruence(const std::string& name, unsigned long p, long nmax, unsigned smax)
{
    if (!is_prime(p) || p == 2)
        throw BadInput("--prime must be an odd prime");
    std::size_t n_max = nmax >= 0 ? static_cast<std::size_t>(nmax)
                                  : static_cast<std::size_t>(std::min<unsigned long>(2000, ipow(p, 4).get_ui()));
    auto c = sequence_values(name, n_max);
    CongruenceReport r = check_dwork_congruence(c, p, n_max, smax);
    json j;
    j["sequence"] = name;
    j["p"] = r.p;
    j["n_max"] = r.n_max;
    j["s_max"] = r.s_max;
    j["pass"] = r.pass;
    if (r.counterexample)
        j["counterexample"] = {{"n", r.counterexample->n}, {"m", r.counterexample->m}, {"s", r.counterexample->s}};
    else
        j["counterexample"] = nullptr;
    j["skipped"] = r.skipped;
    std::cout << j.dump(2) << "\n";
    return r.pass ? 0 : 3;
}

int run_classify(const std::string& op_name, const std::string& primes, unsigned jobs, bool no_cache,
                 const std::string& cache_dir)
{
    return run_table(op_name, primes, "csv", jobs, no_cache, cache_dir, 0, "");
}

int run_legendre(unsigned long p, unsigned long s0)
{
    LegendreResult r = legendre_frobenius(s0, p);
    json j;
    j["p"] = p;
    j["s0"] = s0 % p;
    j["pi"] = r.pi.residue().get_str();
    j["pi_modulus"] = r.pi.modulus().get_str();
    j["ap"] = r.ap.get_str();
    json z = json::array();
    for (const auto& c : r.zeta_numerator)
        z.push_back(c.get_str());
    j["zeta_numerator"] = z;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_catalog(bool list, const std::string& show)
{
    if (!show.empty()) {
        for (const auto& e : catalog())
            if (e.name == show) {
                json j = json::parse(e.op.to_json());
                j["aesz"] = e.aesz;
                j["singular_locus"] = e.singular_locus.to_string("z");
                json forms = json::array();
                for (const auto& f : e.forms)
                    forms.push_back({{"point", f.point.get_str()}, {"form", f.form}, {"twist", f.twist}});
                j["forms"] = forms;
                std::cout << j.dump(2) << "\n";
                return 0;
            }
        const auto& s = second_order(show);
        std::cout << s.op.to_json() << "\n";
        return 0;
    }
    if (list || show.empty()) {
        for (const auto& e : catalog())
            std::cout << e.name << "\tAESZ " << e.aesz << "\t" << e.singular_locus.to_string("z") << "\n";
        for (const auto& s : second_order_catalog())
            std::cout << s.name << "\t" << s.rule.formula << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frobenius polynomials of Calabi-Yau operators via unit roots"};
    app.require_subcommand(1);

    std::string op_name, primes = "3..17", format = "markdown", cache_dir, output, sequence, show;
    unsigned jobs = 1, precision = 0, smax = 3;
    unsigned long prime = 0, point = 0;
    long nmax = -1;
    bool no_cache = false, list = false;

    auto* table = app.add_subcommand("table", "Frobenius table of an operator over a range of primes");
    table->add_option("--operator", op_name, "Catalog name or operator JSON file")->required();
    table->add_option("--primes", primes, "e.g. 3..17 or 5,7,11");
    table->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv", "json"}));
    table->add_option("--jobs,-j", jobs)->check(CLI::Range(1u, 256u));
    table->add_option("--precision", precision, "p-adic precision s (default: from the Weil bounds)");
    table->add_option("--cache-dir", cache_dir);
    table->add_flag("--no-cache", no_cache);
    table->add_option("--output,-o", output);

    auto* frob = app.add_subcommand("frob", "Frobenius polynomial at a single point");
    frob->add_option("--operator", op_name)->required();
    frob->add_option("--prime", prime)->required();
    frob->add_option("--point", point)->required();
    frob->add_option("--precision", precision);
    frob->add_option("--cache-dir", cache_dir);
    frob->add_flag("--no-cache", no_cache);

    auto* wedge = app.add_subcommand("wedge", "Print the exterior-square operator as JSON");
    wedge->add_option("--operator", op_name)->required();

    auto* cong = app.add_subcommand("congruence", "Dwork congruences of a catalog sequence");
    cong->add_option("--sequence", sequence)->required();
    cong->add_option("--prime", prime)->required();
    cong->add_option("--nmax", nmax, "default min(2000, p^4)");
    cong->add_option("--smax", smax);

    auto* cls = app.add_subcommand("classify", "CSV classification of every cell");
    cls->add_option("--operator", op_name)->required();
    cls->add_option("--primes", primes);
    cls->add_option("--jobs,-j", jobs)->check(CLI::Range(1u, 256u));
    cls->add_option("--cache-dir", cache_dir);
    cls->add_flag("--no-cache", no_cache);

    auto* leg = app.add_subcommand("legendre", "Unit root of the Legendre family");
    leg->add_option("--prime", prime)->required();
    leg->add_option("--point", point)->required();

    auto* cat = app.add_subcommand("catalog", "List catalog operators and sequences");
    cat->add_flag("--list", list);
    cat->add_option("--show", show, "Print one operator as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table)
            return run_table(op_name, primes, format, jobs, no_cache, cache_dir, precision, output);
        if (*frob)
            return run_frob(op_name, prime, point, precision, no_cache, cache_dir);
        if (*wedge) {
            ThetaOperator q = wedge_square(resolve_operator(op_name));
            std::cout << json::parse(q.to_json()).dump(2) << "\n";
            return 0;
        }
        if (*cong)
            return run_congruence(sequence, prime, nmax, smax);
        if (*cls)
            return run_classify(op_name, primes, jobs, no_cache, cache_dir);
        if (*leg)
            return run_legendre(prime, point);
        if (*cat)
            return run_catalog(list, show);
    } catch (const Error& e) {
        std::cerr << "frobcy: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "frobcy: unexpected failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
