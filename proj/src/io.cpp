#include "ccdim/io.hpp"

#include <cctype>
#include <unordered_map>
#include <vector>

namespace ccdim {

namespace {

bool token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '^' ||
         c == '-';
}

std::string at_line(int line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

struct GraphAccumulator {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<std::string, std::string>> edges;

  int declare(const std::string& token) {
    const auto [it, fresh] = index.emplace(token, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(token);
    return it->second;
  }

  void edge(const std::string& a, const std::string& b, int line) {
    if (a == b) fail(ErrorKind::SelfLoop, at_line(line, "self-loop at " + a));
    declare(a);
    declare(b);
    edges.emplace_back(a, b);  // duplicates collapse in build_graph
  }

  Graph build() && {
    if (labels.empty()) fail(ErrorKind::EmptyGraph, "input declares no vertices");
    return build_graph(std::move(labels), edges);
  }
};

}  // namespace

Graph parse_edgelist(std::string_view text) {
  GraphAccumulator acc;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view row = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++line;
    if (const auto hash = row.find('#'); hash != std::string_view::npos) {
      row = row.substr(0, hash);
    }

    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < row.size()) {
      if (std::isspace(static_cast<unsigned char>(row[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j]))) ++j;
      const std::string_view tok = row.substr(i, j - i);
      for (const char c : tok) {
        if (!token_char(c)) {
          fail(ErrorKind::ParseError,
               at_line(line, "invalid character '" + std::string(1, c) + "' in token '" +
                                 std::string(tok) + "'"));
        }
      }
      tokens.emplace_back(tok);
      i = j;
    }

    if (tokens.size() == 1) {
      acc.declare(tokens[0]);
    } else if (tokens.size() == 2) {
      acc.edge(tokens[0], tokens[1], line);
    } else if (!tokens.empty()) {
      fail(ErrorKind::ParseError,
           at_line(line, "expected a vertex or an edge, got " + std::to_string(tokens.size()) +
                             " tokens"));
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return std::move(acc).build();
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (const auto& label : g.labels()) {
    out += label;
    out += '\n';
  }
  for (const auto& [a, b] : g.edges()) {
    out += a;
    out += ' ';
    out += b;
    out += '\n';
  }
  return out;
}

namespace {

struct DotToken {
  enum class Type { Ident, LBrace, RBrace, Semi, EdgeOp, End };
  Type type;
  std::string text;
  int line;
};

bool dot_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::vector<DotToken> dot_tokenize(std::string_view text) {
  std::vector<DotToken> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '{') {
      out.push_back({DotToken::Type::LBrace, "{", line});
      ++i;
      continue;
    }
    if (c == '}') {
      out.push_back({DotToken::Type::RBrace, "}", line});
      ++i;
      continue;
    }
    if (c == ';') {
      out.push_back({DotToken::Type::Semi, ";", line});
      ++i;
      continue;
    }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '-') {
        out.push_back({DotToken::Type::EdgeOp, "--", line});
        i += 2;
        continue;
      }
      if (i + 1 < text.size() && text[i + 1] == '>') {
        fail(ErrorKind::UnsupportedDotFeature, at_line(line, "directed edges are not supported"));
      }
      fail(ErrorKind::ParseError, at_line(line, "stray '-'"));
    }
    if (c == '[' || c == ']' || c == '=' || c == ',') {
      fail(ErrorKind::UnsupportedDotFeature, at_line(line, "attributes are not supported"));
    }
    if (c == '"') {
      fail(ErrorKind::UnsupportedDotFeature, at_line(line, "quoted identifiers are not supported"));
    }
    if (c == '/') {
      fail(ErrorKind::UnsupportedDotFeature, at_line(line, "comments are not supported"));
    }
    if (dot_ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && dot_ident_char(text[j])) ++j;
      out.push_back({DotToken::Type::Ident, std::string(text.substr(i, j - i)), line});
      i = j;
      continue;
    }
    fail(ErrorKind::ParseError,
         at_line(line, "unexpected character '" + std::string(1, c) + "'"));
  }
  out.push_back({DotToken::Type::End, "", line});
  return out;
}

}  // namespace

Graph parse_dot_subset(std::string_view text) {
  const std::vector<DotToken> tokens = dot_tokenize(text);
  std::size_t pos = 0;
  const auto peek = [&]() -> const DotToken& { return tokens[pos]; };
  const auto next = [&]() -> const DotToken& { return tokens[pos++]; };
  const auto expect = [&](DotToken::Type type, std::string_view what) -> const DotToken& {
    const DotToken& t = next();
    if (t.type != type) {
      fail(ErrorKind::ParseError,
           at_line(t.line, "expected " + std::string(what) + ", got '" + t.text + "'"));
    }
    return t;
  };
  const auto reject_keyword = [&](const DotToken& t) {
    for (const std::string_view kw : {"digraph", "subgraph", "strict", "node", "edge"}) {
      if (iequals(t.text, kw)) {
        fail(ErrorKind::UnsupportedDotFeature,
             at_line(t.line, "'" + t.text + "' is not supported"));
      }
    }
  };

  {
    const DotToken& head = next();
    if (head.type != DotToken::Type::Ident) {
      fail(ErrorKind::ParseError, at_line(head.line, "expected 'graph'"));
    }
    reject_keyword(head);
    if (!iequals(head.text, "graph")) {
      fail(ErrorKind::ParseError, at_line(head.line, "expected 'graph', got '" + head.text + "'"));
    }
  }
  if (peek().type == DotToken::Type::Ident) {
    reject_keyword(peek());
    next();  // optional graph name
  }
  expect(DotToken::Type::LBrace, "'{'");

  GraphAccumulator acc;
  while (peek().type != DotToken::Type::RBrace) {
    const DotToken& first = expect(DotToken::Type::Ident, "a vertex name");
    reject_keyword(first);
    if (peek().type == DotToken::Type::EdgeOp) {
      next();
      const DotToken& second = expect(DotToken::Type::Ident, "a vertex name");
      reject_keyword(second);
      if (peek().type == DotToken::Type::EdgeOp) {
        fail(ErrorKind::UnsupportedDotFeature,
             at_line(peek().line, "edge chains are not supported"));
      }
      expect(DotToken::Type::Semi, "';'");
      acc.edge(first.text, second.text, first.line);
    } else {
      expect(DotToken::Type::Semi, "';'");
      acc.declare(first.text);
    }
  }
  expect(DotToken::Type::RBrace, "'}'");
  expect(DotToken::Type::End, "end of input");
  return std::move(acc).build();
}

}  // namespace ccdim
