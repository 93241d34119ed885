#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace smtgi {

// Symbols are dense indices into an Alphabet.
using Symbol = int;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

// Length first, then lexicographic by symbol index. Every ordered container
// of words in the library uses this order.
struct ShortLex {
  bool operator()(WordView lhs, WordView rhs) const noexcept {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(),
                                        rhs.end());
  }
  bool operator()(const Word& lhs, const Word& rhs) const noexcept {
    return (*this)(WordView(lhs), WordView(rhs));
  }
};

class Alphabet {
 public:
  Alphabet() = default;
  // Throws InputError on duplicate or empty names.
  explicit Alphabet(std::vector<std::string> symbols);

  // Symbols named "0", "1", ..., "size-1"; the alphabet of sample files.
  static Alphabet numeric(std::size_t size);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  bool contains(Symbol s) const noexcept {
    return s >= 0 && static_cast<std::size_t>(s) < symbols_.size();
  }

  const std::string& name(Symbol s) const;
  // Throws InputError for unknown names.
  Symbol index(std::string_view name) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  // Resolves names to indices; an unknown name raises InputError naming the
  // symbol and its position.
  Word encode(std::span<const std::string> names) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
};

// Throws InputError naming the first symbol of `word` outside [0, size).
void check_symbols(WordView word, std::size_t alphabet_size, std::string_view what = "symbol");

// "a b a" with names, "0 1 0" without; the empty word renders as "<eps>".
std::string format_word(WordView word, const Alphabet* alphabet = nullptr);

}  // namespace smtgi
