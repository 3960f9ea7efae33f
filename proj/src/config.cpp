#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "cherednik/cli.hpp"
#include "cherednik/element_syntax.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/padic.hpp"
#include "cherednik/pbw.hpp"

namespace cherednik {

namespace {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"group", "group_file", "c",     "prime", "precision", "cutoff",
                                                "levels", "level",     "r",     "irrep", "element",   "seed"};
  return keys;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

template <typename T>
T parse_number(const std::string& field, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ValidationError("field '" + field + "': expected a non-negative integer, got '" + value + "'");
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.find(',', start);
    out.emplace_back(trim(std::string_view(value).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("field 'group_file': cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<Scalar>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k].str();
  return out;
}

}  // namespace

unsigned default_precision_from_env() {
  const char* env = std::getenv("CHEREDNIK_PRECISION");
  if (!env || !*env) return kDefaultPrecision;
  const unsigned value = parse_number<unsigned>("CHEREDNIK_PRECISION", env);
  if (value == 0) throw ValidationError("field 'CHEREDNIK_PRECISION': must be positive");
  return value;
}

std::vector<std::pair<std::string, std::string>> JobConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("group", group_spec);
  const unsigned field = data.group ? data.group->field() : 1;
  out.emplace_back("field", field == 1 ? "rational" : "cyclotomic " + std::to_string(field));
  out.emplace_back("c", join(c));
  if (prime) out.emplace_back("prime", std::to_string(*prime));
  out.emplace_back("precision", std::to_string(precision));
  if (cutoff) out.emplace_back("cutoff", std::to_string(*cutoff));
  out.emplace_back("levels", std::to_string(levels));
  if (level) out.emplace_back("level", std::to_string(*level));
  if (r) out.emplace_back("r", std::to_string(*r));
  if (irrep) out.emplace_back("irrep", *irrep);
  if (element) out.emplace_back("element", *element);
  out.emplace_back("seed", std::to_string(seed));
  return out;
}

JobConfig parse_config(std::string_view text, const ConfigOptions& options) {
  std::map<std::string, Entry> entries;
  const std::set<std::string> known(config_keys().begin(), config_keys().end());
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view raw = lines[ln];
    const std::string_view body = strip_comment(raw);
    if (trim(body).empty()) continue;
    std::size_t key_start = 0;
    while (is_space(body[key_start])) ++key_start;
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", ln + 1, key_start + 1);
    const std::string key(trim(body.substr(0, eq)));
    if (key.empty()) throw ParseError("missing key before '='", ln + 1, eq + 1);
    for (std::size_t k = 0; k < key.size(); ++k) {
      const char ch = key[k];
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
        throw ParseError("invalid character in key", ln + 1, key_start + k + 1);
      }
    }
    if (!known.count(key)) throw ParseError("unknown key '" + key + "'", ln + 1, key_start + 1);
    if (entries.count(key)) throw ParseError("repeated key '" + key + "'", ln + 1, key_start + 1);
    std::size_t value_start = eq + 1;
    while (value_start < body.size() && is_space(body[value_start])) ++value_start;
    const std::string value(trim(body.substr(eq + 1)));
    if (value.empty()) throw ParseError("missing value for '" + key + "'", ln + 1, value_start + 1);
    entries[key] = Entry{value, ln + 1, value_start + 1};
  }

  JobConfig cfg;
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second.value;
  };

  if (get("group") && get("group_file")) throw ValidationError("field 'group': group and group_file are exclusive");
  if (const std::string* g = get("group")) {
    cfg.group_spec = *g;
    cfg.data = builtin_group(*g);
  } else if (const std::string* f = get("group_file")) {
    std::filesystem::path path(*f);
    if (path.is_relative()) path = options.base_dir / path;
    cfg.group_spec = "file:" + *f;
    const std::string body = read_file(path);
    try {
      cfg.data = parse_group_file(body, *f);
    } catch (const ValidationError& e) {
      throw ValidationError("field 'group_file': " + std::string(e.what()));
    }
  } else {
    throw ValidationError("field 'group': one of group or group_file is required");
  }
  const GroupAction& group = *cfg.data.group;

  const std::size_t classes = reflection_classes(group).size();
  if (const std::string* c = get("c")) {
    const auto parts = split_commas(*c);
    for (const std::string& part : parts) {
      try {
        cfg.c.push_back(parse_scalar(part, group.field()));
      } catch (const Error& e) {
        throw ValidationError("field 'c': cannot parse '" + part + "': " + e.what());
      }
    }
    if (parts.size() == 1 && classes != 1) cfg.c.assign(classes, cfg.c.front());
    if (cfg.c.size() != classes) {
      throw ValidationError("field 'c': expected " + std::to_string(classes) + " values (one per reflection class), got " +
                            std::to_string(parts.size()));
    }
  } else {
    throw ValidationError("field 'c': required");
  }

  cfg.precision = options.default_precision;
  if (const std::string* v = get("precision")) cfg.precision = parse_number<unsigned>("precision", *v);
  if (cfg.precision == 0) throw ValidationError("field 'precision': must be positive");
  if (const std::string* v = get("prime")) {
    cfg.prime = parse_number<unsigned long>("prime", *v);
    try {
      PadicContext(*cfg.prime, cfg.precision, group.field());
    } catch (const Error& e) {
      throw ValidationError("field 'prime': " + std::string(e.what()));
    }
  }
  if (const std::string* v = get("cutoff")) {
    cfg.cutoff = parse_number<unsigned>("cutoff", *v);
    if (*cfg.cutoff == 0) throw ValidationError("field 'cutoff': must be positive");
  }
  if (const std::string* v = get("levels")) cfg.levels = parse_number<unsigned>("levels", *v);
  if (const std::string* v = get("level")) cfg.level = parse_number<unsigned>("level", *v);
  if (const std::string* v = get("r")) {
    cfg.r = parse_number<unsigned>("r", *v);
    if (!cfg.level) throw ValidationError("field 'r': requires level");
  }
  if (const std::string* v = get("seed")) cfg.seed = parse_number<std::uint64_t>("seed", *v);
  if (const std::string* v = get("irrep")) {
    cfg.data.irrep_index(*v);
    cfg.irrep = *v;
  }
  if (const std::string* v = get("element")) {
    const CherednikAlgebra algebra(cfg.data.group, ReflectionFunction(group, cfg.c));
    try {
      parse_element(*v, algebra);
    } catch (const ParseError& e) {
      throw ValidationError("field 'element': " + std::string(e.what()));
    }
    cfg.element = *v;
  }
  return cfg;
}

GroupData parse_group_file(std::string_view text, const std::string& name) {
  struct Token {
    std::string text;
    std::size_t line, column;
  };
  // Tokenized lines without comments or blanks.
  std::vector<std::vector<Token>> rows;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view body = strip_comment(lines[ln]);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < body.size()) {
      if (is_space(body[i])) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < body.size() && !is_space(body[i])) ++i;
      toks.push_back(Token{std::string(body.substr(start, i - start)), ln + 1, start + 1});
    }
    if (!toks.empty()) rows.push_back(std::move(toks));
  }

  std::size_t pos = 0;
  const std::size_t last_line = lines.size() + 1;
  auto expect_keyword = [&](const std::string& kw, std::size_t arity) -> const std::vector<Token>& {
    if (pos >= rows.size()) throw ParseError("expected '" + kw + "'", last_line, 1);
    const auto& row = rows[pos];
    if (row[0].text != kw) throw ParseError("expected '" + kw + "', got '" + row[0].text + "'", row[0].line, row[0].column);
    if (row.size() != arity + 1) {
      throw ParseError("'" + kw + "' takes " + std::to_string(arity) + " argument(s)", row[0].line, row[0].column);
    }
    ++pos;
    return row;
  };
  auto number = [](const Token& t) {
    unsigned out = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), out);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || out == 0) {
      throw ParseError("expected a positive integer", t.line, t.column);
    }
    return out;
  };

  if (pos >= rows.size()) throw ParseError("empty group file", 1, 1);
  unsigned ell = 1;
  {
    const auto& row = rows[pos];
    if (row[0].text != "field") throw ParseError("expected 'field'", row[0].line, row[0].column);
    if (row.size() == 2 && row[1].text == "rational") {
      ell = 1;
    } else if (row.size() == 3 && row[1].text == "cyclotomic") {
      ell = number(row[2]);
      if (ell > 64) throw ParseError("cyclotomic index too large", row[2].line, row[2].column);
    } else {
      throw ParseError("expected 'field rational' or 'field cyclotomic <ell>'", row[0].line, row[0].column);
    }
    ++pos;
  }
  const unsigned dim = number(expect_keyword("dimension", 1)[1]);

  auto read_matrix_rows = [&](std::size_t count, std::size_t cols) {
    std::vector<Vec> out;
    for (std::size_t k = 0; k < count; ++k) {
      if (pos >= rows.size()) throw ParseError("unexpected end of file in matrix", last_line, 1);
      const auto& row = rows[pos];
      if (row.size() != cols) {
        throw ParseError("expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()), row[0].line,
                         row[0].column);
      }
      Vec v;
      for (const Token& t : row) {
        try {
          v.push_back(parse_scalar(t.text, ell));
        } catch (const Error&) {
          throw ParseError("bad entry '" + t.text + "'", t.line, t.column);
        }
      }
      out.push_back(std::move(v));
      ++pos;
    }
    return out;
  };

  std::vector<Matrix> generators;
  while (pos < rows.size() && rows[pos][0].text == "generator") {
    expect_keyword("generator", 0);
    generators.push_back(Matrix::from_rows(read_matrix_rows(dim, dim), dim));
    expect_keyword("end", 0);
  }
  if (generators.empty()) {
    if (pos >= rows.size()) throw ParseError("expected 'generator'", last_line, 1);
    throw ParseError("expected 'generator'", rows[pos][0].line, rows[pos][0].column);
  }

  GroupData data;
  data.name = name;
  data.group = std::make_shared<const GroupAction>(GroupAction::enumerate(generators));
  if (data.group->field() != canonical_field(ell) && data.group->field() != 1) {
    throw ValidationError("group file: entries lie outside the declared field");
  }
  std::size_t square_sum = 0;
  while (pos < rows.size()) {
    const auto& head = expect_keyword("irrep", 2);
    const std::string label = head[1].text;
    const unsigned d = number(head[2]);
    for (const Irrep& w : data.irreps) {
      if (w.label == label) throw ParseError("repeated irrep label '" + label + "'", head[1].line, head[1].column);
    }
    std::vector<Matrix> images;
    for (std::size_t g = 0; g < generators.size(); ++g) images.push_back(Matrix::from_rows(read_matrix_rows(d, d), d));
    expect_keyword("end", 0);
    data.irreps.push_back(irrep_from_generators(label, images, *data.group));
    square_sum += static_cast<std::size_t>(d) * d;
  }
  if (square_sum != data.group->order()) {
    throw ValidationError("group file: irreps are incomplete (sum of squared dimensions " + std::to_string(square_sum) +
                          ", group order " + std::to_string(data.group->order()) + ")");
  }
  return data;
}

}  // namespace cherednik
