// Copyright 2026 The ualg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ualg/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ualg/errors.hpp"

namespace ualg {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({text.substr(start, i - start), line, column});
      column += i - start;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
    if (!text.empty()) {
      end_line_ = 1;
      for (char ch : text) {
        if (ch == '\n') {
          ++end_line_;
          end_column_ = 1;
        } else {
          ++end_column_;
        }
      }
    }
  }

  FiniteAlgebra parse() {
    keyword("algebra");
    const std::string name(word("algebra name").text);
    keyword("size");
    const Token size_tok = next("carrier size");
    const std::size_t size = integer(size_tok);
    if (size == 0) throw ParseError(size_tok.line, size_tok.column, "size must be positive");

    std::vector<Symbol> symbols;
    std::vector<std::vector<Element>> tables;
    std::optional<Element> top;
    for (;;) {
      const Token t = next("'end'");
      if (t.text == "end") break;
      if (t.text == "op" || t.text == "const") {
        const Token name_tok = word("operation name");
        for (const auto& s : symbols) {
          if (s.name == name_tok.text) {
            throw ParseError(name_tok.line, name_tok.column,
                             "duplicate symbol '" + std::string(name_tok.text) + "'");
          }
        }
        std::size_t arity = 0;
        if (t.text == "op") arity = integer(next("arity"));
        std::size_t entries = 1;
        for (std::size_t k = 0; k < arity; ++k) {
          if (entries > kDefaultCarrierLimit * kDefaultCarrierLimit / size) {
            throw ParseError(t.line, t.column, "operation table too large");
          }
          entries *= size;
        }
        std::vector<Element> table;
        table.reserve(entries);
        for (std::size_t k = 0; k < entries; ++k) table.push_back(element(next("table entry"), size));
        symbols.push_back({std::string(name_tok.text), arity});
        tables.push_back(std::move(table));
      } else if (t.text == "top") {
        if (top) throw ParseError(t.line, t.column, "duplicate top declaration");
        top = element(next("top element"), size);
      } else {
        throw ParseError(t.line, t.column, "unexpected '" + std::string(t.text) + "'");
      }
    }
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      throw ParseError(t.line, t.column, "unexpected '" + std::string(t.text) + "' after 'end'");
    }
    return make_algebra(Signature(std::move(symbols)), size, std::move(tables), top, name);
  }

 private:
  Token next(const char* expected) {
    if (pos_ >= tokens_.size()) {
      throw ParseError(end_line_, end_column_,
                       std::string("unexpected end of input, expected ") + expected);
    }
    return tokens_[pos_++];
  }

  void keyword(std::string_view kw) {
    const Token t = next(std::string("'").append(kw).append("'").c_str());
    if (t.text != kw) {
      throw ParseError(t.line, t.column,
                       "expected '" + std::string(kw) + "', found '" + std::string(t.text) + "'");
    }
  }

  Token word(const char* what) { return next(what); }

  static std::size_t integer(const Token& t) {
    std::size_t v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw ParseError(t.line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
    }
    return v;
  }

  static Element element(const Token& t, std::size_t size) {
    const std::size_t v = integer(t);
    if (v >= size) {
      throw ValueOutOfRange(std::to_string(t.line) + ":" + std::to_string(t.column) + ": value " +
                            std::to_string(v) + " is not below size " + std::to_string(size));
    }
    return static_cast<Element>(v);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1;
  std::size_t end_column_ = 1;
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) { return Parser(text).parse(); }

std::string render_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\nsize " << a.size() << "\n";
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const Symbol& s = a.signature()[op];
    const auto& table = a.table(op);
    if (s.arity == 0) {
      out << "const " << s.name << " " << table[0] << "\n";
      continue;
    }
    out << "op " << s.name << " " << s.arity << "\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << table[i] << ((i + 1) % a.size() == 0 ? "\n" : " ");
    }
  }
  if (a.top()) out << "top " << *a.top() << "\n";
  out << "end\n";
  return out.str();
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

}  // namespace ualg
