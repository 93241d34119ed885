#include "smtgi/alphabet.hpp"

#include "smtgi/error.hpp"

namespace smtgi {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  index_.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw InputError("empty symbol name");
    auto [it, inserted] = index_.emplace(symbols_[i], static_cast<Symbol>(i));
    if (!inserted) throw InputError("duplicate symbol '" + symbols_[i] + "'");
  }
}

Alphabet Alphabet::numeric(std::size_t size) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Symbol s) const {
  if (!contains(s)) throw InputError("symbol index " + std::to_string(s) + " out of range");
  return symbols_[static_cast<std::size_t>(s)];
}

Symbol Alphabet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("unknown symbol '" + std::string(name) + "'");
  return it->second;
}

Word Alphabet::encode(std::span<const std::string> names) const {
  Word word;
  word.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto it = index_.find(names[i]);
    if (it == index_.end()) {
      throw InputError("unknown symbol '" + names[i] + "' at position " + std::to_string(i + 1));
    }
    word.push_back(it->second);
  }
  return word;
}

void check_symbols(WordView word, std::size_t alphabet_size, std::string_view what) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || static_cast<std::size_t>(word[i]) >= alphabet_size) {
      throw InputError("unknown " + std::string(what) + " " + std::to_string(word[i]) +
                       " at position " + std::to_string(i + 1) + " (alphabet size " +
                       std::to_string(alphabet_size) + ")");
    }
  }
}

std::string format_word(WordView word, const Alphabet* alphabet) {
  if (word.empty()) return "<eps>";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    if (alphabet && alphabet->contains(word[i]))
      out += alphabet->name(word[i]);
    else
      out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace smtgi
