#include "frobcy/cache.hpp"

#include "frobcy/errors.hpp"
#include "frobcy/padic.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace frobcy {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, md, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("SHA-256 computation failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

std::string default_cache_dir()
{
    if (const char* d = std::getenv("FROBCY_CACHE_DIR"); d && *d)
        return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return (fs::path(x) / "frobcy").string();
    if (const char* h = std::getenv("HOME"); h && *h)
        return (fs::path(h) / ".cache" / "frobcy").string();
    return (fs::temp_directory_path() / "frobcy-cache").string();
}

std::string cache_path(const std::string& dir, const std::string& op_hash, unsigned long p, unsigned K, std::size_t N)
{
    return (fs::path(dir) / (op_hash + "_p" + std::to_string(p) + "_K" + std::to_string(K) + "_N" +
                             std::to_string(N) + ".json"))
        .string();
}

std::optional<std::vector<mpz_class>> load_cached_series(const std::string& file, const std::string& op_hash,
                                                         unsigned long p, unsigned K, std::size_t N)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str(), nullptr, false);
    auto bad = [&](const std::string& why) { return CorruptCache(file + ": " + why); };
    if (j.is_discarded() || !j.is_object())
        throw bad("not valid JSON");
    try {
        if (j.at("operator_hash").get<std::string>() != op_hash || j.at("p").get<unsigned long>() != p ||
            j.at("K").get<unsigned>() != K || j.at("N").get<std::size_t>() != N)
            throw bad("header does not match the request");
        const auto& arr = j.at("residues");
        if (!arr.is_array() || arr.size() != N + 1)
            throw bad("wrong number of residues");
        const mpz_class mod = ipow(p, K);
        std::vector<mpz_class> out;
        out.reserve(N + 1);
        for (const auto& v : arr) {
            mpz_class x;
            if (!v.is_string() || x.set_str(v.get<std::string>(), 10) != 0 || x < 0 || x >= mod)
                throw bad("malformed residue");
            out.push_back(x);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw bad(e.what());
    }
}

void store_cached_series(const std::string& file, const std::string& op_hash, unsigned long p, unsigned K,
                         const std::vector<mpz_class>& residues)
{
    nlohmann::ordered_json j;
    j["operator_hash"] = op_hash;
    j["p"] = p;
    j["K"] = K;
    j["N"] = residues.empty() ? 0 : residues.size() - 1;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : residues)
        arr.push_back(r.get_str());
    j["residues"] = std::move(arr);

    static std::atomic<unsigned long> counter{0};
    std::ostringstream tmpname;
    tmpname << file << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
    {
        std::ofstream out(tmpname.str(), std::ios::binary | std::ios::trunc);
        if (!out)
            return;
        out << j.dump();
        if (!out)
            return;
    }
    std::error_code ec;
    fs::rename(tmpname.str(), file, ec);
    if (ec)
        fs::remove(tmpname.str(), ec);
}

std::vector<mpz_class> cache_series(const ThetaOperator& op, unsigned long p, unsigned K, std::size_t N,
                                    const std::string& dir, CacheOutcome* outcome)
{
    auto compute = [&] { return solve_series(op, N, SeriesMode::modular(p, K)).coeffs; };
    if (dir.empty()) {
        if (outcome)
            *outcome = CacheOutcome::Disabled;
        return compute();
    }
    const std::string hash = sha256_hex(op.to_json());
    const std::string file = cache_path(dir, hash, p, K, N);
    CacheOutcome result = CacheOutcome::Miss;
    try {
        if (auto hit = load_cached_series(file, hash, p, K, N)) {
            if (outcome)
                *outcome = CacheOutcome::Hit;
            return *hit;
        }
    } catch (const CorruptCache&) {
        result = CacheOutcome::Recomputed;
    }
    auto residues = compute();
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec)
        store_cached_series(file, hash, p, K, residues);
    if (outcome)
        *outcome = result;
    return residues;
}

}  // namespace frobcy
