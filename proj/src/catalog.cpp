#include "avoid/catalog.hpp"

#include <cstdlib>
#include <stdexcept>

namespace avoid {

const std::vector<CatalogFormula>& formula_catalog() {
  static const std::vector<CatalogFormula> table = {
      {"AAB.ABA.ABB.BBA.BAB.BAA", CatalogClass::finite},
      {"AAB.ABBA", CatalogClass::finite},
      {"AAB.BBAB", CatalogClass::finite},
      {"AAB.BBAA", CatalogClass::finite},
      {"AAB.BABB", CatalogClass::finite},
      {"AAB.BABAA", CatalogClass::finite},
      {"ABA.ABBA", CatalogClass::finite},
      {"AABA.BAAB", CatalogClass::finite},
      {"AA.ABA.ABBA", CatalogClass::polynomial},
      {"ABA.AABB", CatalogClass::polynomial},
      {"AABA.ABB.BBA", CatalogClass::polynomial},
      {"BBA.ABA.AABB", CatalogClass::polynomial},
      {"AABA.AABB", CatalogClass::polynomial},
      {"AA.ABA.BABB", CatalogClass::exponential},
      {"AA.ABB.BBAB", CatalogClass::exponential},
      {"AA.ABAB.BB", CatalogClass::exponential},
      {"AA.ABBA.BAB", CatalogClass::exponential},
      {"AAB.ABB.BBAA", CatalogClass::exponential},
      {"AAB.ABBA.BAA", CatalogClass::exponential},
      {"AABB.ABBA", CatalogClass::exponential},
      {"ABAB.BABA", CatalogClass::exponential},
      {"AABA.BABA", CatalogClass::exponential},
      {"AAA", CatalogClass::exponential},
      {"ABA.BAAB.BAB", CatalogClass::exponential},
      {"AABA.ABAA.BAB", CatalogClass::exponential},
      {"AABA.ABAA.BAAB", CatalogClass::exponential},
      {"ABAAB", CatalogClass::exponential},
      {"BAB.ABA.AABB", CatalogClass::exponential},
      {"AAB.ABA.ABBA", CatalogClass::exponential},
      {"BAA.ABA.AABB", CatalogClass::exponential},
      {"BBA.AABA.AABB", CatalogClass::exponential},
  };
  return table;
}

const std::vector<FiniteRow>& finite_binary_rows() {
  static const std::vector<FiniteRow> table = {
      {"AAB.BBAA", 22, 1428},
      {"AAB.ABA.ABB.BBA.BAB.BAA", 23, 810},
      {"AAB.BBAB", 23, 1662},
      {"AABA.BAAB", 26, 2124},
      {"AAB.ABBA", 30, 1684},
      {"AAB.BABAA", 42, 71002},
      {"AAB.BABB", 69, 9252},
      {"ABA.ABBA", 90, 31572},
  };
  return table;
}

const std::vector<MorphismClaim>& morphism_claims() {
  static const std::vector<MorphismClaim> table = {
      {"m_aa_aba_babb_22.txt", "AA.ABA.BABB", 22, 6, true},
      {"m_aa_aba_babb_44.txt", "AA.ABA.BABB", 44, 5, false},
      {"m_aa_abb_bbab_60.txt", "AA.ABB.BBAB", 60, 11, true},
      {"m_aa_abab_bb_11.txt", "AA.ABAB.BB", 11, 4, false},
      {"m_aa_abba_bab_30.txt", "AA.ABBA.BAB", 30, 6, false},
      {"m_aab_abb_bbaa_30.txt", "AAB.ABB.BBAA", 30, 5, false},
      {"m_aab_abba_baa_38.txt", "AAB.ABBA.BAA", 38, 5, false},
      {"m_aabb_abba_193.txt", "AABB.ABBA", 193, 16, false},
      {"m_abab_baba_50.txt", "ABAB.BABA", 50, 3, false},
      {"m_abab_baba_50.txt", "AABA.BABA", 50, 3, true},
      {"m_aaa_32.txt", "AAA", 32, 4, false},
      {"m_aba_baab_bab_10.txt", "ABA.BAAB.BAB", 10, 3, false},
      {"m_aaba_abaa_bab_57.txt", "AABA.ABAA.BAB", 57, 6, false},
      {"m_aaba_abaa_baab_30.txt", "AABA.ABAA.BAAB", 30, 3, false},
      {"m_abaab.txt", "ABAAB", 10, 3, true},
      {"m_bab_aba_aabb_16.txt", "BAB.ABA.AABB", 16, 5, false},
      {"m_aab_aba_abba_84.txt", "AAB.ABA.ABBA", 84, 5, true},
      {"m_baa_aba_aabb_304.txt", "BAA.ABA.AABB", 304, 7, false},
      {"m_bba_aaba_aabb_160.txt", "BBA.AABA.AABB", 160, 21, true},
      {"m_bba_aaba_aabb_202.txt", "BBA.AABA.AABB", 202, 5, false},
  };
  return table;
}

std::filesystem::path default_data_dir(const std::filesystem::path& override_dir) {
  namespace fs = std::filesystem;
  if (!override_dir.empty()) {
    if (!fs::is_directory(override_dir))
      throw std::runtime_error("data directory not found: " + override_dir.string());
    return override_dir;
  }
  if (const char* env = std::getenv("AVOID_DATA_DIR"); env && *env && fs::is_directory(env))
    return fs::path(env);
  if (fs::is_directory("data")) return fs::path("data");
#ifdef AVOID_SOURCE_DATA_DIR
  if (fs::is_directory(AVOID_SOURCE_DATA_DIR)) return fs::path(AVOID_SOURCE_DATA_DIR);
#endif
  throw std::runtime_error("no data directory found; pass one or set AVOID_DATA_DIR");
}

Morphism load_catalog_morphism(const std::string& file, const std::filesystem::path& data_dir) {
  const std::filesystem::path dir = default_data_dir(data_dir);
  std::filesystem::path path = dir / file;
  if (!std::filesystem::exists(path) && !file.ends_with(".txt")) path = dir / (file + ".txt");
  return Morphism::load(path);
}

namespace {

struct BuiltinWord {
  const char* name;
  const char* inner_file;
  const char* outer_file;  // nullptr for plain fixed points
};

constexpr BuiltinWord kBuiltinWords[] = {
    {"b2", "b2.txt", nullptr},
    {"b3", "b3.txt", nullptr},
    {"b4", "b4.txt", nullptr},
    {"b5", "b5.txt", nullptr},
    {"gx_b3", "b3.txt", "g_x.txt"},
    {"gy_b3", "b3.txt", "g_y.txt"},
    {"gz_b3", "b3.txt", "g_z.txt"},
    {"gzbar_b3", "b3.txt", "g_zbar.txt"},
    {"gt_b3", "b3.txt", "g_t.txt"},
    {"gw_b3", "b3.txt", "g_w.txt"},
};

}  // namespace

std::vector<std::string> builtin_word_names() {
  std::vector<std::string> names;
  for (const BuiltinWord& b : kBuiltinWords) names.emplace_back(b.name);
  return names;
}

MorphicWordSpec builtin_word(const std::string& name, const std::filesystem::path& data_dir) {
  for (const BuiltinWord& b : kBuiltinWords) {
    if (name != b.name) continue;
    const auto dir = default_data_dir(data_dir);
    MorphicWordSpec spec{name, Morphism::load(dir / b.inner_file), 0, std::nullopt};
    if (b.outer_file) spec.outer = Morphism::load(dir / b.outer_file);
    return spec;
  }
  throw std::invalid_argument("unknown word name: " + name);
}

}  // namespace avoid
