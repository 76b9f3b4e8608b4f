#include "banet/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "banet/error.hpp"

namespace banet {
namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Non-blank lines, comments stripped, split on whitespace.
std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      const std::size_t start = k;
      while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      if (k > start) line.tokens.push_back({std::string(raw.substr(start, k - start)), number, start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& message, const Token& at) {
  throw ParseError(message, at.line, at.column);
}

Rational parse_entry(const Token& token) {
  if (token.text == "eps" || token.text == "+eps") return Rational(1, 2);
  if (token.text == "-eps") return Rational(-1, 2);
  try {
    return Rational::parse(token.text);
  } catch (const ParseError& e) {
    fail(e.what(), token);
  } catch (const OverflowError& e) {
    fail(e.what(), token);
  }
}

bool is_keyword(const std::string& word) {
  return word == "nodes" || word == "names" || word == "weights" || word == "thresholds";
}

bool is_identifier(const std::string& word) {
  if (word.empty() || !(std::isalpha(static_cast<unsigned char>(word[0])) || word[0] == '_')) return false;
  for (const char c : word) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return word != "eps" && word != "parallel" && word != "sequential" && !is_keyword(word);
}

std::string format_entry(const Rational& r, bool allow_eps) {
  if (allow_eps && r == Rational(1, 2)) return "eps";
  if (allow_eps && r == Rational(-1, 2)) return "-eps";
  return r.to_string();
}

}  // namespace

ThresholdNetwork parse_network(std::string_view text) {
  const auto lines = tokenize_lines(text);
  std::size_t idx = 0;
  if (lines.empty()) throw ParseError("empty network document", 0, 0);

  const Line& header = lines[idx++];
  if (header.tokens[0].text != "nodes") fail("expected 'nodes <count>'", header.tokens[0]);
  if (header.tokens.size() != 2) fail("expected 'nodes <count>'", header.tokens.back());
  std::size_t n = 0;
  {
    const Token& t = header.tokens[1];
    if (t.text.empty() || t.text.size() > 3 || t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("node count must be a positive integer", t);
    }
    n = std::stoul(t.text);
    if (n == 0) fail("node count must be a positive integer", t);
    if (n > kMaxNodes) fail("node count exceeds " + std::to_string(kMaxNodes), t);
  }

  std::vector<std::string> names;
  std::optional<Matrix> weights;
  std::optional<std::vector<Rational>> thresholds;

  while (idx < lines.size()) {
    const Line& line = lines[idx++];
    const Token& key = line.tokens[0];
    if (key.text == "names") {
      if (!names.empty()) fail("duplicate 'names' section", key);
      std::set<std::string> seen;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        const Token& t = line.tokens[k];
        if (!is_identifier(t.text)) fail("invalid node name '" + t.text + "'", t);
        if (!seen.insert(t.text).second) fail("duplicate node name '" + t.text + "'", t);
        names.push_back(t.text);
      }
      if (names.size() != n) {
        fail("expected " + std::to_string(n) + " node names, found " + std::to_string(names.size()), key);
      }
    } else if (key.text == "weights") {
      if (weights) fail("duplicate 'weights' section", key);
      if (line.tokens.size() != 1) fail("matrix rows start on the line after 'weights'", line.tokens[1]);
      Matrix w;
      while (w.size() < n) {
        if (idx >= lines.size() || is_keyword(lines[idx].tokens[0].text)) {
          fail("dimension mismatch: expected " + std::to_string(n) + " matrix rows, found " +
                   std::to_string(w.size()),
               idx < lines.size() ? lines[idx].tokens[0] : line.tokens.back());
        }
        const Line& row_line = lines[idx++];
        if (row_line.tokens.size() != n) {
          fail("dimension mismatch: matrix row " + std::to_string(w.size() + 1) + " has " +
                   std::to_string(row_line.tokens.size()) + " entries, expected " + std::to_string(n),
               row_line.tokens.size() > n ? row_line.tokens[n] : row_line.tokens.back());
        }
        std::vector<Rational> row;
        for (const Token& t : row_line.tokens) row.push_back(parse_entry(t));
        w.push_back(std::move(row));
      }
      if (idx < lines.size() && !is_keyword(lines[idx].tokens[0].text)) {
        fail("dimension mismatch: more than " + std::to_string(n) + " matrix rows", lines[idx].tokens[0]);
      }
      weights = std::move(w);
    } else if (key.text == "thresholds") {
      if (thresholds) fail("duplicate 'thresholds' section", key);
      if (line.tokens.size() != n + 1) {
        fail("dimension mismatch: threshold vector has " + std::to_string(line.tokens.size() - 1) +
                 " entries, expected " + std::to_string(n),
             line.tokens.back());
      }
      std::vector<Rational> theta;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) theta.push_back(parse_entry(line.tokens[k]));
      thresholds = std::move(theta);
    } else if (key.text == "nodes") {
      fail("duplicate 'nodes' line", key);
    } else {
      fail("unexpected '" + key.text + "'", key);
    }
  }
  if (!weights) throw ParseError("missing 'weights' section", lines.back().number, 1);
  if (!thresholds) throw ParseError("missing 'thresholds' line", lines.back().number, 1);
  return ThresholdNetwork(std::move(*weights), std::move(*thresholds), std::move(names));
}

std::string serialize_network(const ThresholdNetwork& net) {
  std::ostringstream out;
  out << "nodes " << net.size() << '\n';
  if (!net.names().empty()) {
    out << "names";
    for (const auto& name : net.names()) out << ' ' << name;
    out << '\n';
  }
  out << "weights\n";
  for (const auto& row : net.weights()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << format_entry(row[j], false);
    out << '\n';
  }
  out << "thresholds";
  for (const auto& t : net.thresholds()) out << ' ' << format_entry(t, true);
  out << '\n';
  return out.str();
}

namespace {

// Recursive-descent parser for the schedule notation.
class ScheduleParser {
 public:
  ScheduleParser(std::string_view text, std::size_t n, const ThresholdNetwork* net)
      : text_(text), n_(n), net_(net) {}

  Schedule parse() {
    skip_space();
    Schedule result = parse_top();
    skip_space();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return result;
  }

 private:
  Schedule parse_top() {
    if (at_end()) error("empty schedule");
    const char c = text_[pos_];
    if (c == '(') {
      auto parts = parse_list('(', ')', '{', '}');
      return wrap([&] { return BlockSequentialSchedule(n_, std::move(parts)); });
    }
    if (c == '{') {
      auto seqs = parse_list('{', '}', '(', ')');
      return wrap([&] { return BlockParallelSchedule(n_, std::move(seqs)); });
    }
    if (c == '[') {
      auto blocks = parse_list('[', ']', '{', '}');
      return wrap([&] { return PeriodicSchedule(n_, std::move(blocks)); });
    }
    const std::string word = read_word();
    if (word == "parallel") return BlockSequentialSchedule::parallel(n_);
    if (word == "sequential") return BlockSequentialSchedule::sequential(n_);
    error("expected '(', '{', '[', 'parallel' or 'sequential'");
  }

  template <typename Make>
  Schedule wrap(Make make) {
    try {
      return make();
    } catch (const ScheduleError& e) {
      throw ParseError(e.what(), 1, 1);
    } catch (const IndexError& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }

  std::vector<std::vector<Node>> parse_list(char open, char close, char inner_open, char inner_close) {
    expect(open);
    std::vector<std::vector<Node>> out;
    skip_space();
    if (peek(close)) error("empty schedule");
    for (;;) {
      out.push_back(parse_group(inner_open, inner_close));
      skip_space();
      if (peek(close)) break;
      expect(',');
    }
    expect(close);
    return out;
  }

  std::vector<Node> parse_group(char open, char close) {
    skip_space();
    const std::size_t start = pos_;
    expect(open);
    skip_space();
    if (peek(close)) {
      pos_ = start;
      error(open == '{' ? "empty block" : "empty sub-sequence");
    }
    std::vector<Node> nodes;
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      const std::string word = read_word();
      if (word.empty()) error("expected a node");
      const auto node = resolve(word);
      if (!node) {
        pos_ = at;
        error("unknown node '" + word + "'");
      }
      for (const Node seen : nodes) {
        if (seen == *node) {
          pos_ = at;
          error("node '" + word + "' listed twice in one group");
        }
      }
      nodes.push_back(*node);
      skip_space();
      if (peek(close)) break;
      expect(',');
    }
    expect(close);
    return nodes;
  }

  std::optional<Node> resolve(const std::string& word) const {
    if (net_) return net_->find(word);
    if (word.empty() || word.size() > 6 || word.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    const Node v = std::stoul(word);
    if (v < 1 || v > n_) return std::nullopt;
    return v;
  }

  std::string read_word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void expect(char c) {
    skip_space();
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void error(const std::string& message) const {
    // Schedules are single-line; count newlines for multi-line input anyway.
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t n_;
  const ThresholdNetwork* net_;
};

}  // namespace

Schedule parse_schedule(std::string_view text, const ThresholdNetwork& net) {
  return ScheduleParser(text, net.size(), &net).parse();
}

Schedule parse_schedule(std::string_view text, std::size_t node_count) {
  if (node_count == 0 || node_count > kMaxNodes) {
    throw ParseError("node count must be in 1.." + std::to_string(kMaxNodes), 0, 0);
  }
  return ScheduleParser(text, node_count, nullptr).parse();
}

std::vector<Configuration> TraceDocument::configurations() const {
  std::vector<Configuration> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(l.config);
  return out;
}

TraceDocument make_trace(const Trajectory& t) {
  TraceDocument doc{t.mode, t.period, {}};
  for (const State& s : t.transient) doc.lines.push_back({TraceSection::transient, s.config, s.phase != 0});
  for (const State& s : t.cycle) doc.lines.push_back({TraceSection::cycle, s.config, s.phase != 0});
  if (!t.cycle.empty()) doc.lines.push_back({TraceSection::repeat, t.cycle.front().config, false});
  return doc;
}

std::string group_bits(const std::string& bits, const std::vector<std::size_t>& groups) {
  if (groups.empty()) return bits;
  std::string out;
  std::size_t pos = 0;
  std::size_t g = 0;
  while (pos < bits.size()) {
    const std::size_t width = groups.size() == 1 ? groups[0] : (g < groups.size() ? groups[g] : bits.size());
    if (width == 0) return bits;
    if (!out.empty()) out += ' ';
    out += bits.substr(pos, width);
    pos += width;
    ++g;
  }
  return out;
}

std::string serialize_trace(const TraceDocument& doc, const std::vector<std::size_t>& groups) {
  std::ostringstream out;
  out << "# trace mode=" << (doc.mode == Mode::macro ? "macro" : "complete") << " period=" << doc.period << '\n';
  for (const auto& l : doc.lines) {
    switch (l.section) {
      case TraceSection::transient: out << "transient "; break;
      case TraceSection::cycle: out << "cycle "; break;
      case TraceSection::repeat: out << "repeat "; break;
    }
    out << group_bits(l.config.to_string(), groups);
    if (l.micro) out << " micro";
    out << '\n';
  }
  return out.str();
}

TraceDocument parse_trace(std::string_view text) {
  TraceDocument doc;
  std::size_t number = 0;
  std::size_t pos = 0;
  std::optional<std::size_t> width;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (raw.starts_with("# trace")) {
      std::istringstream header{std::string(raw.substr(7))};
      std::string field;
      while (header >> field) {
        if (field == "mode=macro") doc.mode = Mode::macro;
        else if (field == "mode=complete") doc.mode = Mode::complete;
        else if (field.starts_with("period=")) doc.period = std::stoul(field.substr(7));
      }
      continue;
    }
    const auto lines = tokenize_lines(raw);
    if (lines.empty()) continue;
    const auto& tokens = lines.front().tokens;
    TraceLine l;
    const std::string& kind = tokens[0].text;
    if (kind == "transient") l.section = TraceSection::transient;
    else if (kind == "cycle") l.section = TraceSection::cycle;
    else if (kind == "repeat") l.section = TraceSection::repeat;
    else throw ParseError("unknown trace line kind '" + kind + "'", number, tokens[0].column);
    std::string bits;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      if (tokens[k].text == "micro" && k + 1 == tokens.size()) {
        l.micro = true;
      } else if (tokens[k].text.find_first_not_of("01") == std::string::npos) {
        bits += tokens[k].text;
      } else {
        throw ParseError("invalid configuration token '" + tokens[k].text + "'", number, tokens[k].column);
      }
    }
    if (bits.empty()) throw ParseError("missing configuration", number, tokens[0].column);
    l.config = Configuration::parse(bits);
    if (width && *width != l.config.size()) {
      throw ParseError("configuration width changes within the trace", number, tokens[1].column);
    }
    width = l.config.size();
    doc.lines.push_back(l);
  }
  return doc;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace banet
