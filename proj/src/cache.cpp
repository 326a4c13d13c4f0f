#include "fc/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace fc {

static const char kMagic[4] = {'F', 'C', 'Q', '1'};

bool cache_enabled() {
  const char* dir = std::getenv("FUNDCOEFF_CACHE_DIR");
  return dir != nullptr && dir[0] != '\0';
}

static std::string cache_path(const std::string& name) {
  const char* dir = std::getenv("FUNDCOEFF_CACHE_DIR");
  return std::string(dir) + "/" + name + ".fcq";
}

bool cache_load(const std::string& name, std::vector<mpz_class>& out) {
  if (!cache_enabled()) return false;
  FILE* f = std::fopen(cache_path(name).c_str(), "rb");
  if (!f) return false;
  char magic[4];
  uint64_t count = 0;
  bool ok = std::fread(magic, 1, 4, f) == 4 &&
            std::memcmp(magic, kMagic, 4) == 0 &&
            std::fread(&count, 8, 1, f) == 1 && count < (1ull << 32);
  std::vector<mpz_class> v;
  if (ok) {
    v.resize(count);
    for (uint64_t i = 0; i < count && ok; ++i) {
      int64_t len = 0;
      ok = std::fread(&len, 8, 1, f) == 1 && len > -(1 << 28) && len < (1 << 28);
      if (!ok) break;
      size_t bytes = static_cast<size_t>(len < 0 ? -len : len);
      if (bytes > 0) {
        std::vector<unsigned char> buf(bytes);
        ok = std::fread(buf.data(), 1, bytes, f) == bytes;
        if (ok) {
          mpz_import(v[i].get_mpz_t(), bytes, 1, 1, 0, 0, buf.data());
          if (len < 0) v[i] = -v[i];
        }
      }
    }
  }
  std::fclose(f);
  if (ok) out = std::move(v);
  return ok;
}

void cache_store(const std::string& name, const std::vector<mpz_class>& v) {
  if (!cache_enabled()) return;
  std::string path = cache_path(name);
  std::string tmp = path + ".tmp";
  FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) return;
  uint64_t count = v.size();
  std::fwrite(kMagic, 1, 4, f);
  std::fwrite(&count, 8, 1, f);
  for (const auto& x : v) {
    size_t bytes = 0;
    std::vector<unsigned char> buf;
    if (x != 0) {
      buf.resize((mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8);
      mpz_export(buf.data(), &bytes, 1, 1, 0, 0, x.get_mpz_t());
    }
    int64_t len = static_cast<int64_t>(bytes);
    if (x < 0) len = -len;
    std::fwrite(&len, 8, 1, f);
    if (bytes) std::fwrite(buf.data(), 1, bytes, f);
  }
  std::fclose(f);
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace fc
