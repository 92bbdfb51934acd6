#include "impalg/relmodel_io.hpp"

#include <fstream>
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

PointPair parse_pair_token(const std::string& tok) {
  // "(i,j)" with nonnegative decimal i, j
  if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
    fail(errc::parse, "bad pair token '" + tok + "'");
  const auto comma = tok.find(',');
  if (comma == std::string::npos) fail(errc::parse, "bad pair token '" + tok + "'");
  const std::string a = tok.substr(1, comma - 1);
  const std::string b = tok.substr(comma + 1, tok.size() - comma - 2);
  auto to_int = [&tok](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse, "bad pair token '" + tok + "'");
    return std::stoi(s);
  };
  return {to_int(a), to_int(b)};
}

int parse_base(const std::vector<std::string>& t) {
  if (t.size() != 2 || t[1].find_first_not_of("0123456789") != std::string::npos)
    fail(errc::parse, "expected 'base <n>'");
  return std::stoi(t[1]);
}

void check_range(PointPair p, int base, const std::string& where) {
  if (p.first < 0 || p.first >= base || p.second < 0 || p.second >= base)
    fail(errc::parse, where + ": point pair (" + std::to_string(p.first) + "," +
                          std::to_string(p.second) + ") outside base " + std::to_string(base));
}

}  // namespace

PairSet parse_pair_list(const std::string& text) {
  std::istringstream in(text);
  PairSet out;
  std::string tok;
  while (in >> tok) out.push_back(parse_pair_token(tok));
  return normalized(std::move(out));
}

std::string format_pair_list(const PairSet& ps) {
  std::string out;
  for (PointPair p : ps) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }
  return out;
}

Representation parse_representation(std::istream& in, const FiniteAlgebra& alg) {
  const auto lines = tokenize_lines(in);
  if (lines.empty() || lines[0][0] != "base") fail(errc::parse, "expected 'base <n>' first");

  Representation rep;
  rep.context.base_size = parse_base(lines[0]);
  rep.map.assign(static_cast<size_t>(alg.size()), {});

  bool have_top = false, have_mode = false, have_profile = false;
  std::vector<char> have_map(static_cast<size_t>(alg.size()), 0);

  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] == "top") {
      if (have_top) fail(errc::parse, "duplicate top line");
      have_top = true;
      for (size_t j = 1; j < t.size(); ++j) {
        PointPair p = parse_pair_token(t[j]);
        check_range(p, rep.context.base_size, "top");
        rep.context.top.push_back(p);
      }
      rep.context.top = normalized(std::move(rep.context.top));
    } else if (t[0] == "map") {
      if (t.size() < 3 || t[2] != "=") fail(errc::parse, "expected 'map <name> = (i,j) ...'");
      const auto idx = alg.find(t[1]);
      if (!idx) fail(errc::parse, "unknown element name '" + t[1] + "'");
      if (have_map[static_cast<size_t>(*idx)]) fail(errc::parse, "duplicate map line for " + t[1]);
      have_map[static_cast<size_t>(*idx)] = 1;
      PairSet img;
      for (size_t j = 3; j < t.size(); ++j) {
        PointPair p = parse_pair_token(t[j]);
        check_range(p, rep.context.base_size, "map " + t[1]);
        img.push_back(p);
      }
      rep.map[static_cast<size_t>(*idx)] = normalized(std::move(img));
    } else if (t[0] == "mode") {
      if (have_mode) fail(errc::parse, "duplicate mode line");
      have_mode = true;
      if (t.size() != 2) fail(errc::parse, "expected 'mode absolute|relative'");
      const auto mode = mode_from_string(t[1]);
      if (!mode) fail(errc::parse, "unknown mode '" + t[1] + "'");
      rep.mode = *mode;
    } else if (t[0] == "profile") {
      if (have_profile) fail(errc::parse, "duplicate profile line");
      have_profile = true;
      if (t.size() != 2) fail(errc::parse, "expected 'profile <flag>,<flag>,...'");
      rep.profile = profile_from_string(t[1]);
    } else {
      fail(errc::parse, "unknown directive '" + t[0] + "'");
    }
  }

  if (!have_top) fail(errc::parse, "missing top line");
  for (int a = 0; a < alg.size(); ++a)
    if (!have_map[static_cast<size_t>(a)]) fail(errc::parse, "missing map line for " + alg.name(a));
  return rep;
}

Representation parse_representation_text(const std::string& text, const FiniteAlgebra& alg) {
  std::istringstream in(text);
  return parse_representation(in, alg);
}

Representation read_representation_file(const std::string& path, const FiniteAlgebra& alg) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open file: " + path);
  return parse_representation(in, alg);
}

std::string format_representation(const FiniteAlgebra& alg, const Representation& rep) {
  std::ostringstream out;
  out << "base " << rep.context.base_size << "\n";
  out << "top";
  if (!rep.context.top.empty()) out << " " << format_pair_list(rep.context.top);
  out << "\n";
  for (int a = 0; a < alg.size(); ++a) {
    out << "map " << alg.name(a) << " =";
    const auto& img = rep.map[static_cast<size_t>(a)];
    if (!img.empty()) out << " " << format_pair_list(img);
    out << "\n";
  }
  out << "mode " << to_string(rep.mode) << "\n";
  const std::string profile = to_string(rep.profile);
  if (!profile.empty()) out << "profile " << profile << "\n";
  return out.str();
}

Poset parse_poset(std::istream& in) {
  const auto lines = tokenize_lines(in);
  if (lines.empty() || lines[0][0] != "base") fail(errc::parse, "expected 'base <n>' first");
  const int n = parse_base(lines[0]);

  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) leq[static_cast<size_t>(x) * n + x] = 1;

  bool have_leq = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] != "leq") fail(errc::parse, "unknown directive '" + t[0] + "'");
    if (have_leq) fail(errc::parse, "duplicate leq line");
    have_leq = true;
    for (size_t j = 1; j < t.size(); ++j) {
      PointPair p = parse_pair_token(t[j]);
      check_range(p, n, "leq");
      leq[static_cast<size_t>(p.first) * n + p.second] = 1;
    }
  }

  try {
    return Poset(n, std::move(leq));
  } catch (const Error& e) {
    fail(errc::parse, e.what());
  }
}

Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open file: " + path);
  return parse_poset(in);
}

}  // namespace impalg
