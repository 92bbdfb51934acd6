#include "impalg/algebra_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace impalg {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
  fail(errc::parse, "line " + std::to_string(line_no + 1) + ": " + what);
}

class AlgebraParser {
public:
  explicit AlgebraParser(std::istream& in) : lines_(tokenize_lines(in)) {}

  FiniteAlgebra run() {
    if (lines_.empty() || lines_[0][0] != "elements")
      fail(errc::parse, "expected 'elements <name>+' as the first content line");
    parse_elements();
    for (pos_ = 1; pos_ < lines_.size(); ++pos_) {
      const auto& t = lines_[pos_];
      if (t[0] == "arrow")
        parse_table(arrow_, "arrow");
      else if (t[0] == "compose")
        parse_table(compose_, "compose");
      else if (t[0] == "const")
        parse_const(t);
      else
        parse_fail(pos_, "unknown directive '" + t[0] + "'");
    }
    if (arrow_.empty()) fail(errc::parse, "missing arrow section");
    std::optional<std::vector<int>> compose;
    if (!compose_.empty()) compose = std::move(compose_);
    return FiniteAlgebra(std::move(names_), std::move(arrow_), std::move(compose), one_, id_, zero_);
  }

private:
  void parse_elements() {
    const auto& t = lines_[0];
    if (t.size() < 2) parse_fail(0, "elements line needs at least one name");
    for (size_t i = 1; i < t.size(); ++i) {
      if (t[i].find_first_of(":,{}()=") != std::string::npos)
        parse_fail(0, "bad element name '" + t[i] + "'");
      if (!index_.emplace(t[i], static_cast<int>(i - 1)).second)
        parse_fail(0, "duplicate element name '" + t[i] + "'");
      names_.push_back(t[i]);
    }
    n_ = static_cast<int>(names_.size());
  }

  int lookup(const std::string& name, size_t line_no) const {
    auto it = index_.find(name);
    if (it == index_.end()) parse_fail(line_no, "unknown element name '" + name + "'");
    return it->second;
  }

  void parse_table(std::vector<int>& table, const char* what) {
    if (lines_[pos_].size() != 1) parse_fail(pos_, std::string(what) + " header takes no arguments");
    if (!table.empty()) parse_fail(pos_, std::string("duplicate ") + what + " section");
    table.assign(static_cast<size_t>(n_) * n_, 0);
    for (int r = 0; r < n_; ++r) {
      ++pos_;
      if (pos_ >= lines_.size()) parse_fail(pos_ - 1, std::string(what) + " section is missing rows");
      const auto& t = lines_[pos_];
      const std::string expected = names_[static_cast<size_t>(r)] + ":";
      if (t[0] != expected)
        parse_fail(pos_, "expected row '" + expected + "' (rows follow declaration order)");
      if (static_cast<int>(t.size()) != n_ + 1)
        parse_fail(pos_, "row has " + std::to_string(t.size() - 1) + " entries, expected " +
                             std::to_string(n_));
      for (int c = 0; c < n_; ++c)
        table[static_cast<size_t>(r) * n_ + c] = lookup(t[static_cast<size_t>(c) + 1], pos_);
    }
  }

  void parse_const(const std::vector<std::string>& t) {
    if (t.size() != 3) parse_fail(pos_, "expected 'const one|id|zero <name>'");
    std::optional<int>* slot = nullptr;
    if (t[1] == "one")
      slot = &one_;
    else if (t[1] == "id")
      slot = &id_;
    else if (t[1] == "zero")
      slot = &zero_;
    else
      parse_fail(pos_, "unknown constant '" + t[1] + "'");
    if (slot->has_value()) parse_fail(pos_, "duplicate const " + t[1]);
    *slot = lookup(t[2], pos_);
  }

  std::vector<std::vector<std::string>> lines_;
  size_t pos_ = 0;
  int n_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<int> arrow_, compose_;
  std::optional<int> one_, id_, zero_;
};

void format_table(std::ostream& out, const FiniteAlgebra& alg, const char* header,
                  const std::vector<int>& table) {
  const int n = alg.size();
  out << header << "\n";
  for (int r = 0; r < n; ++r) {
    out << alg.name(r) << ":";
    for (int c = 0; c < n; ++c) out << " " << alg.name(table[static_cast<size_t>(r) * n + c]);
    out << "\n";
  }
}

}  // namespace

FiniteAlgebra parse_algebra(std::istream& in) { return AlgebraParser(in).run(); }

FiniteAlgebra parse_algebra_text(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

FiniteAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open file: " + path);
  return parse_algebra(in);
}

std::string format_algebra(const FiniteAlgebra& alg) {
  std::ostringstream out;
  out << "elements";
  for (const auto& name : alg.elements()) out << " " << name;
  out << "\n";
  format_table(out, alg, "arrow", alg.arrow_table());
  if (alg.has_compose()) format_table(out, alg, "compose", *alg.compose_table());
  if (alg.one()) out << "const one " << alg.name(*alg.one()) << "\n";
  if (alg.id()) out << "const id " << alg.name(*alg.id()) << "\n";
  if (alg.zero()) out << "const zero " << alg.name(*alg.zero()) << "\n";
  return out.str();
}

}  // namespace impalg
