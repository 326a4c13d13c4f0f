#ifndef FC_CACHE_HPP
#define FC_CACHE_HPP

// Optional on-disk cache for expensive integer coefficient tables.
// Enabled only when the FUNDCOEFF_CACHE_DIR environment variable is
// set to a writable directory. Files use a small binary format with
// magic "FCQ1"; corrupt or mismatched files are ignored.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fc {

bool cache_enabled();

// Load a table by name; returns false if the cache is disabled, the
// file is absent, or the contents fail validation.
bool cache_load(const std::string& name, std::vector<mpz_class>& out);

// Store a table; silently does nothing when the cache is disabled.
void cache_store(const std::string& name, const std::vector<mpz_class>& v);

}  // namespace fc

#endif
