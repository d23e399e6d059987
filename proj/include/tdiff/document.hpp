#ifndef TDIFF_DOCUMENT_HPP
#define TDIFF_DOCUMENT_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/network.hpp"

// Network document format, one record per line, '#' starts a comment:
//
//   products t1 t2
//   node 0 t1=1/1
//   node 1 t1=1/2 t2=1/2
//   node 2 t1=1/1 t2=1/1 avail=t2
//   edge 0 1 1/2
//
// A node record lists every product for which it has a threshold; the
// optional avail= field narrows p(i) to a subset of those (a node of a
// reduced network). Weights and thresholds are exact "num/den" or integers.

namespace tdiff {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string serialize(const Network& net) {
  std::ostringstream os;
  os << "# tdiff network\nproducts";
  for (const auto& name : net.product_names()) os << ' ' << name;
  os << '\n';
  for (NodeId i = 0; i < net.node_count(); ++i) {
    os << "node " << i;
    const ProductSet domain = net.threshold_domain(i);
    for (ProductId t : domain) os << ' ' << net.product_name(t) << '=' << net.threshold(i, t).str();
    if (net.availability(i) != domain) {
      os << " avail=";
      bool first = true;
      for (ProductId t : net.availability(i)) {
        os << (first ? "" : ",") << net.product_name(t);
        first = false;
      }
    }
    os << '\n';
  }
  for (const Edge& e : net.graph().edges()) {
    os << "edge " << e.source << ' ' << e.target << ' ' << e.weight.str() << '\n';
  }
  return os.str();
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    if (k >= line.size() || line[k] == '#') break;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r' && line[k] != '#') ++k;
    out.push_back(Token{line.substr(start, k - start), start + 1});
  }
  return out;
}

inline bool valid_product_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.' || c == '\'';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Parses a network document. Syntax errors and violated network invariants
/// are reported as ParseError with the offending line and column.
inline Network parse_network(std::string_view document) {
  using detail::Token;
  std::vector<std::string> products;
  std::optional<std::size_t> products_line;

  struct NodeRecord {
    std::size_t line;
    ProductSet domain;
    std::map<ProductId, Rational> theta;
    std::optional<ProductSet> avail;
  };
  std::map<NodeId, NodeRecord> nodes;
  struct EdgeRecord {
    std::size_t line;
    std::size_t column;
    Edge edge;
  };
  std::vector<EdgeRecord> edges;

  auto parse_id = [](const Token& tok, std::size_t line, const char* what) -> NodeId {
    NodeId v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
      throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    }
    return v;
  };
  auto parse_rational = [](std::string_view text, std::size_t line, std::size_t column) {
    try {
      return Rational::parse(text);
    } catch (const std::exception& e) {
      throw ParseError(line, column, e.what());
    }
  };
  auto lookup = [&](std::string_view name, std::size_t line, std::size_t column) -> ProductId {
    for (std::size_t t = 0; t < products.size(); ++t) {
      if (products[t] == name) return static_cast<ProductId>(t);
    }
    throw ParseError(line, column, "unknown product '" + std::string(name) + "'");
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const std::size_t end = std::min(document.find('\n', pos), document.size());
    const std::string_view line = document.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string_view kind = toks[0].text;

    if (kind == "products") {
      if (products_line) throw ParseError(line_no, toks[0].column, "duplicate products record");
      if (toks.size() < 2) throw ParseError(line_no, toks[0].column, "products record lists no product");
      for (std::size_t k = 1; k < toks.size(); ++k) {
        if (!detail::valid_product_name(toks[k].text)) {
          throw ParseError(line_no, toks[k].column, "invalid product name '" + std::string(toks[k].text) + "'");
        }
        for (const auto& p : products) {
          if (p == toks[k].text) throw ParseError(line_no, toks[k].column, "duplicate product '" + p + "'");
        }
        products.emplace_back(toks[k].text);
      }
      if (products.size() > kMaxProducts) throw ParseError(line_no, toks[0].column, "more than 64 products");
      products_line = line_no;
      continue;
    }
    if (!products_line) throw ParseError(line_no, toks[0].column, "products record must come first");

    if (kind == "node") {
      if (toks.size() < 3) throw ParseError(line_no, toks[0].column, "node record needs an id and products");
      const NodeId id = parse_id(toks[1], line_no, "node id");
      if (nodes.count(id)) throw ParseError(line_no, toks[1].column, "node " + std::to_string(id) + " defined twice");
      NodeRecord rec{line_no, {}, {}, std::nullopt};
      for (std::size_t k = 2; k < toks.size(); ++k) {
        const auto eq = toks[k].text.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(line_no, toks[k].column, "expected product=threshold, got '" + std::string(toks[k].text) + "'");
        }
        const std::string_view key = toks[k].text.substr(0, eq);
        const std::string_view value = toks[k].text.substr(eq + 1);
        const std::size_t value_col = toks[k].column + eq + 1;
        if (key == "avail") {
          if (rec.avail) throw ParseError(line_no, toks[k].column, "duplicate avail field");
          ProductSet s;
          std::size_t start = 0;
          while (start <= value.size()) {
            const std::size_t comma = std::min(value.find(',', start), value.size());
            s.insert(lookup(value.substr(start, comma - start), line_no, value_col + start));
            start = comma + 1;
          }
          rec.avail = s;
          continue;
        }
        const ProductId t = lookup(key, line_no, toks[k].column);
        if (rec.domain.contains(t)) {
          throw ParseError(line_no, toks[k].column, "threshold for '" + std::string(key) + "' given twice");
        }
        const Rational th = parse_rational(value, line_no, value_col);
        if (!th.is_positive()) {
          throw ParseError(line_no, value_col, "node " + std::to_string(id) + ": threshold must be positive");
        }
        if (th > Rational(1)) {
          throw ParseError(line_no, value_col, "node " + std::to_string(id) + ": threshold exceeds 1");
        }
        rec.domain.insert(t);
        rec.theta.emplace(t, th);
      }
      if (rec.domain.empty()) throw ParseError(line_no, toks[0].column, "node " + std::to_string(id) + " offers no product");
      if (rec.avail && !rec.avail->subset_of(rec.domain)) {
        throw ParseError(line_no, toks[0].column, "node " + std::to_string(id) + ": avail lists a product without threshold");
      }
      nodes.emplace(id, std::move(rec));
      continue;
    }

    if (kind == "edge") {
      if (toks.size() != 4) throw ParseError(line_no, toks[0].column, "edge record needs source, target and weight");
      const NodeId s = parse_id(toks[1], line_no, "source id");
      const NodeId t = parse_id(toks[2], line_no, "target id");
      const Rational w = parse_rational(toks[3].text, line_no, toks[3].column);
      if (w.is_negative() || w > Rational(1)) throw ParseError(line_no, toks[3].column, "weight outside [0,1]");
      if (s == t) throw ParseError(line_no, toks[1].column, "self-loop on node " + std::to_string(s));
      edges.push_back(EdgeRecord{line_no, toks[0].column, Edge{s, t, w}});
      continue;
    }
    throw ParseError(line_no, toks[0].column, "unknown record '" + std::string(kind) + "'");
  }

  if (!products_line) throw ParseError(line_no, 1, "document has no products record");
  const std::size_t n = nodes.size();
  std::size_t expect = 0;
  for (const auto& [id, rec] : nodes) {
    if (id != expect) throw ParseError(rec.line, 1, "node ids must be 0.." + std::to_string(n - 1) + ", missing " + std::to_string(expect));
    ++expect;
  }

  std::vector<Rational> in_sum(n);
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
  std::vector<Edge> plain;
  for (const auto& rec : edges) {
    const Edge& e = rec.edge;
    if (e.source >= n || e.target >= n) {
      throw ParseError(rec.line, rec.column, "edge " + std::to_string(e.source) + "->" + std::to_string(e.target) + " references an unknown node");
    }
    if (!seen.emplace(std::pair{e.source, e.target}, rec.line).second) {
      throw ParseError(rec.line, rec.column, "parallel edge " + std::to_string(e.source) + "->" + std::to_string(e.target));
    }
    in_sum[e.target] += e.weight;
    if (in_sum[e.target] > Rational(1)) {
      throw ParseError(rec.line, rec.column, "node " + std::to_string(e.target) + ": in-weights sum to " + in_sum[e.target].str() + " > 1");
    }
    plain.push_back(e);
  }

  const std::size_t pc = products.size();
  std::vector<ProductSet> domain(n);
  std::vector<ProductSet> avail(n);
  std::vector<Rational> theta(n * pc, Rational(1));
  for (const auto& [id, rec] : nodes) {
    domain[id] = rec.domain;
    avail[id] = rec.avail.value_or(rec.domain);
    for (const auto& [t, th] : rec.theta) theta[id * pc + t] = th;
  }
  Network base(WeightedDigraph(n, std::move(plain)), std::move(products), std::move(domain), std::move(theta));
  if (avail == std::vector<ProductSet>(base.availability().begin(), base.availability().end())) return base;
  return base.with_availability(std::move(avail));
}

}  // namespace tdiff

#endif  // TDIFF_DOCUMENT_HPP
