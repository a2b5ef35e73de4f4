#include "pbz/format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace pbz {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct Pair {
  std::string from;  // "*" for the default entry
  std::string to;
};

// Splits "x:y" at the unique colon leaving known labels on both sides.
Pair split_pair(const std::string& token, const std::vector<std::string>& labels,
                bool allow_default, std::size_t line) {
  auto known = [&](std::string_view s) {
    for (const auto& l : labels) {
      if (l == s) return true;
    }
    return false;
  };
  std::optional<Pair> found;
  for (std::size_t i = token.find(':'); i != std::string::npos;
       i = token.find(':', i + 1)) {
    const std::string lhs = token.substr(0, i);
    const std::string rhs = token.substr(i + 1);
    const bool left_ok = known(lhs) || (allow_default && lhs == "*");
    if (!left_ok || !known(rhs)) continue;
    if (found) throw FormatError("ambiguous pair '" + token + "'", line);
    found = Pair{lhs, rhs};
  }
  if (!found) {
    throw FormatError("'" + token + "' is not a pair of known labels", line);
  }
  return *found;
}

std::optional<UnaryOp> unary_keyword(std::string_view word) {
  if (word == "invol") return UnaryOp::Kleene;
  if (word == "brouwer") return UnaryOp::Brouwer;
  if (word == "diamond") return UnaryOp::Diamond;
  return std::nullopt;
}

std::string_view keyword(UnaryOp op) {
  switch (op) {
    case UnaryOp::Kleene:
      return "invol";
    case UnaryOp::Brouwer:
      return "brouwer";
    case UnaryOp::Diamond:
      return "diamond";
  }
  return "?";
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  std::optional<std::string> name;
  std::optional<Signature> signature;
  std::optional<std::vector<std::string>> labels;
  std::vector<std::pair<std::string, std::vector<std::string>>> covers;
  struct Entry {
    UnaryOp op;
    Pair pair;
  };
  std::vector<Entry> entries;
  bool saw_invol = false;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto words = tokens(raw);
    if (words.empty()) continue;
    const std::string& head = words[0];
    auto need_labels = [&] {
      if (!labels) throw FormatError("'" + head + "' before 'elements'", line_no);
    };
    auto known = [&](const std::string& l) {
      for (const auto& x : *labels) {
        if (x == l) return;
      }
      throw FormatError("unknown element '" + l + "'", line_no);
    };
    if (head == "algebra") {
      if (words.size() < 2) throw FormatError("expected 'algebra <name>'", line_no);
      if (name) throw FormatError("repeated 'algebra'", line_no);
      const auto first = raw.find(words[1], raw.find(head) + head.size());
      const auto last = raw.find_last_not_of(" \t\r");
      name = raw.substr(first, last + 1 - first);
    } else if (head == "signature") {
      if (words.size() != 2) {
        throw FormatError("expected 'signature <LAT|I|BI|BZ|MODAL>'", line_no);
      }
      if (signature) throw FormatError("repeated 'signature'", line_no);
      try {
        signature = parse_signature(words[1]);
      } catch (const UnknownName& e) {
        throw FormatError(e.what(), line_no);
      }
    } else if (head == "elements") {
      if (labels) throw FormatError("repeated 'elements'", line_no);
      if (words.size() < 2) throw FormatError("no elements listed", line_no);
      labels.emplace(words.begin() + 1, words.end());
      for (std::size_t i = 0; i < labels->size(); ++i) {
        for (std::size_t j = i + 1; j < labels->size(); ++j) {
          if ((*labels)[i] == (*labels)[j]) {
            throw FormatError("duplicate element '" + (*labels)[i] + "'",
                              line_no);
          }
        }
      }
    } else if (head == "covers") {
      need_labels();
      if (words.size() < 2 || words[1].size() < 2 || words[1].back() != ':') {
        throw FormatError("expected 'covers <x>: <y> ...'", line_no);
      }
      const std::string lower = words[1].substr(0, words[1].size() - 1);
      known(lower);
      std::vector<std::string> uppers(words.begin() + 2, words.end());
      for (const auto& u : uppers) known(u);
      covers.emplace_back(lower, std::move(uppers));
    } else if (auto op = unary_keyword(head)) {
      need_labels();
      if (*op == UnaryOp::Kleene) saw_invol = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        Pair p = split_pair(words[i], *labels, *op != UnaryOp::Kleene, line_no);
        entries.push_back({*op, std::move(p)});
      }
    } else {
      throw FormatError("unknown keyword '" + head + "'", line_no);
    }
  }
  if (!name) throw FormatError("missing 'algebra' line", line_no);
  if (!signature) throw FormatError("missing 'signature' line", line_no);
  if (!labels) throw FormatError("missing 'elements' line", line_no);

  AlgebraBuilder builder(*name, *signature);
  builder.elements(*labels);
  for (const auto& [lower, uppers] : covers) builder.covers(lower, uppers);
  if (saw_invol) {
    std::vector<bool> seen(labels->size(), false);
    for (const auto& e : entries) {
      if (e.op != UnaryOp::Kleene) continue;
      for (std::size_t i = 0; i < labels->size(); ++i) {
        if ((*labels)[i] == e.pair.from || (*labels)[i] == e.pair.to) {
          seen[i] = true;
        }
      }
    }
    for (std::size_t i = 0; i < labels->size(); ++i) {
      if (!seen[i]) {
        throw FormatError("'invol' does not mention '" + (*labels)[i] + "'",
                          line_no);
      }
    }
  }
  for (const auto& e : entries) {
    if (e.op == UnaryOp::Kleene) {
      builder.involution(e.pair.from, e.pair.to);
    } else if (e.pair.from == "*") {
      builder.unary_default(e.op, e.pair.to);
    } else {
      builder.unary(e.op, e.pair.from, e.pair.to);
    }
  }
  return builder.build();
}

std::string format_algebra(const FiniteAlgebra& algebra) {
  std::ostringstream out;
  out << "algebra " << algebra.name() << '\n';
  out << "signature " << to_string(algebra.signature()) << '\n';
  out << "elements";
  for (const auto& l : algebra.labels()) out << ' ' << l;
  out << '\n';
  for (Element x = 0; x < algebra.size(); ++x) {
    const auto up = algebra.covers(x);
    if (up.empty()) continue;
    out << "covers " << algebra.label(x) << ':';
    for (Element y : up) out << ' ' << algebra.label(y);
    out << '\n';
  }
  for (UnaryOp op : kUnaryOps) {
    if (!algebra.has(op)) continue;
    out << keyword(op);
    for (Element x = 0; x < algebra.size(); ++x) {
      const Element y = algebra.apply(op, x);
      if (op == UnaryOp::Kleene && y < x) continue;
      out << ' ' << algebra.label(x) << ':' << algebra.label(y);
    }
    out << '\n';
  }
  return out.str();
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'", 0);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_algebra(text.str());
}

void save_algebra(const FiniteAlgebra& algebra, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_algebra(algebra);
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace pbz
