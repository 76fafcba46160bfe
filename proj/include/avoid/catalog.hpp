#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "avoid/formula.hpp"
#include "avoid/morphic.hpp"

namespace avoid {

// Binary formulas with a known status: avoided by finitely many binary words,
// or avoidable with polynomially / exponentially many avoiding words.
enum class CatalogClass { finite, polynomial, exponential };

struct CatalogFormula {
  std::string text;
  CatalogClass cls;
};
const std::vector<CatalogFormula>& formula_catalog();

// The finite cases together with the exact maximal length of an avoiding
// binary word and the number of nonempty avoiding binary words.
struct FiniteRow {
  std::string formula;
  int max_length;
  std::uint64_t total;
};
const std::vector<FiniteRow>& finite_binary_rows();

// Uniform binary morphisms shipped under data/, each claimed to avoid a
// formula (sometimes also its reverse) together with all squares of period
// >= square_floor on images of ternary square-free words.
struct MorphismClaim {
  std::string file;
  std::string formula;
  int width;
  int square_floor;
  bool with_reverse;
};
const std::vector<MorphismClaim>& morphism_claims();

// Directory holding the morphism files: explicit argument, then the
// AVOID_DATA_DIR environment variable, then ./data, then the source tree.
std::filesystem::path default_data_dir(const std::filesystem::path& override_dir = {});
Morphism load_catalog_morphism(const std::string& file,
                               const std::filesystem::path& data_dir = {});

// Named infinite words: the fixed points b2, b3, b4, b5 and binary images of
// b3 under the morphisms gx, gy, gz, gzbar, gt, gw.
std::vector<std::string> builtin_word_names();
MorphicWordSpec builtin_word(const std::string& name,
                             const std::filesystem::path& data_dir = {});

}  // namespace avoid
