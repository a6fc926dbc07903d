#pragma once

#include "frobcy/diffop.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace frobcy {

std::string sha256_hex(const std::string& data);

// FROBCY_CACHE_DIR, else $XDG_CACHE_HOME/frobcy, else ~/.cache/frobcy.
std::string default_cache_dir();

std::string cache_path(const std::string& dir, const std::string& op_hash, unsigned long p, unsigned K, std::size_t N);

// Residues c_0..c_N mod p^K; nullopt on a miss. A damaged file raises CorruptCache.
std::optional<std::vector<mpz_class>> load_cached_series(const std::string& file, const std::string& op_hash,
                                                         unsigned long p, unsigned K, std::size_t N);
void store_cached_series(const std::string& file, const std::string& op_hash, unsigned long p, unsigned K,
                         const std::vector<mpz_class>& residues);

enum class CacheOutcome { Hit, Miss, Recomputed, Disabled };

// Residues of the holomorphic solution of op, read from or written to the cache directory.
std::vector<mpz_class> cache_series(const ThetaOperator& op, unsigned long p, unsigned K, std::size_t N,
                                    const std::string& dir, CacheOutcome* outcome = nullptr);

}  // namespace frobcy
