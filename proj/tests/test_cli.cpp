#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cherednik/cli.hpp"
#include "cherednik/element_syntax.hpp"
#include "cherednik/errors.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cherednik;

namespace {

const std::filesystem::path kExamples = CHEREDNIK_EXAMPLES_DIR;

JobConfig config(const std::string& text, const std::string& command = "euler") {
  ConfigOptions options;
  options.base_dir = kExamples;
  JobConfig cfg = parse_config(text, options);
  cfg.command = command;
  return cfg;
}

std::string run(const std::string& text, const std::string& command, ReportFormat format = ReportFormat::tsv) {
  return emit_report(run_command(config(text, command)), format);
}

// Reflection classes by brute force: rank(g - 1) = 1, then conjugation orbits.
std::size_t reflection_class_count(const GroupAction& group) {
  std::set<std::size_t> seen;
  std::size_t count = 0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if ((group.element(g) - Matrix::identity(group.dimension())).rank() != 1 || seen.count(g)) continue;
    ++count;
    for (std::size_t h = 0; h < group.order(); ++h) {
      seen.insert(group.index_of(group.element(h) * group.element(g) * group.element(group.inverse(h))));
    }
  }
  return count;
}

std::vector<std::vector<std::string>> data_rows(const std::string& tsv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(tsv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      cells.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    out.push_back(cells);
  }
  return out;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(CHEREDNIK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("parse_config examples") {
  const JobConfig z2 = config("group = cyclic:2\nc = 1/2\n");
  CHECK(z2.data.group->order() == 2);
  REQUIRE(z2.c.size() == 1);
  CHECK(z2.c[0] == Scalar::rational(1, 2));
  CHECK(z2.precision == 64);
  CHECK_FALSE(z2.cutoff.has_value());

  try {
    config("group = cyclic:2\nc = 1/2\n  foo = 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }

  const GroupData s3 = symmetric_group_s3();
  const std::size_t s3_classes = reflection_class_count(*s3.group);
  CHECK(s3_classes == 1);
  CHECK(config("group = S3\nc = 1/3\n").c.size() == s3_classes);
  CHECK_THROWS_AS(config("group = S3\nc = 1/3, 1/5\n"), ValidationError);

  const GroupData d4 = dihedral_group(4);
  const std::size_t d4_classes = reflection_class_count(*d4.group);
  CHECK(d4_classes == 2);
  const JobConfig d4cfg = config("group = dihedral:4\nc = 1/2, 1/3\n");
  REQUIRE(d4cfg.c.size() == d4_classes);
  CHECK(d4cfg.c[1] == Scalar::rational(1, 3));
  CHECK(config("group = dihedral:4\nc = 1/2\n").c == std::vector<Scalar>(2, Scalar::rational(1, 2)));

  const GroupData z3 = cyclic_group(3);
  CHECK(reflection_class_count(*z3.group) == 2);
  CHECK(config("group = cyclic:3\nc = z, 1/2\n").c[0] == Scalar::zeta(3));
}

TEST_CASE("parse_config errors") {
  auto field_error = [](const std::string& text, const std::string& field) {
    try {
      config(text);
    } catch (const ParseError&) {
      return false;
    } catch (const ValidationError& e) {
      return std::string(e.what()).find(field) != std::string::npos;
    }
    return false;
  };
  CHECK(field_error("group = cyclic:2\nc = 1/2\nprime = 4\n", "prime"));
  CHECK(field_error("group = cyclic:3\nc = 1/2\nprime = 5\n", "prime"));
  CHECK(field_error("group = cyclic:2\nc = 1/2\ncutoff = 0\n", "cutoff"));
  CHECK(field_error("group = cyclic:2\nc = 1/2\ncutoff = -3\n", "cutoff"));
  CHECK(field_error("group = cyclic:2\nc = 1/2\nirrep = std\n", "irrep"));
  CHECK(field_error("group = cyclic:2\nc = 1/q\n", "c"));
  CHECK(field_error("group = cyclic:2\n", "c"));
  CHECK(field_error("c = 1/2\n", "group"));
  CHECK(field_error("group = cyclic:2\nc = 1/2\nelement = x3\n", "element"));
  CHECK(field_error("group = cyclic:2\nc = 1/2\nr = 2\n", "r"));
  CHECK(field_error("group = cyclic:2\ngroup_file = s3.group\nc = 1/2\n", "group"));
  CHECK(field_error("group_file = missing.group\nc = 1/2\n", "group_file"));

  auto parse_position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      config(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(parse_position("# comment\ngroup cyclic:2\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(parse_position("group = cyclic:2\nc = 1/2\nc = 1/3\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(parse_position("group = cyclic:2\n  = 4\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(parse_position("group = cyclic:2\nc =\n") == std::pair<std::size_t, std::size_t>{2, 4});
  CHECK(parse_position("gr-oup = cyclic:2\n") == std::pair<std::size_t, std::size_t>{1, 3});

  const JobConfig full = config(
      "group = cyclic:2   # trailing comment\r\n"
      "c = 1/2\nprime = 5\nprecision = 30\ncutoff = 4\nlevels = 2\nlevel = 1\nr = 3\n"
      "irrep = sgn\nelement = x1*y1\nseed = 17\n");
  CHECK(*full.prime == 5);
  CHECK(full.precision == 30);
  CHECK(*full.cutoff == 4);
  CHECK(full.levels == 2);
  CHECK(*full.level == 1);
  CHECK(*full.r == 3);
  CHECK(*full.irrep == "sgn");
  CHECK(*full.element == "x1*y1");
  CHECK(full.seed == 17);
}

TEST_CASE("precision override from the environment") {
  ::setenv("CHEREDNIK_PRECISION", "20", 1);
  CHECK(default_precision_from_env() == 20);
  ::setenv("CHEREDNIK_PRECISION", "abc", 1);
  CHECK_THROWS_AS(default_precision_from_env(), ValidationError);
  ::unsetenv("CHEREDNIK_PRECISION");
  CHECK(default_precision_from_env() == 64);

  ConfigOptions options;
  options.default_precision = 20;
  CHECK(parse_config("group = cyclic:2\nc = 1/2\n", options).precision == 20);
  CHECK(parse_config("group = cyclic:2\nc = 1/2\nprecision = 8\n", options).precision == 8);
}

TEST_CASE("group data files") {
  std::ifstream in(kExamples / "s3.group");
  std::stringstream text;
  text << in.rdbuf();
  const GroupData file = parse_group_file(text.str(), "s3.group");
  const GroupData builtin = symmetric_group_s3();
  CHECK(file.group->order() == 6);
  CHECK(file.group->dimension() == 2);
  REQUIRE(file.irreps.size() == 3);
  for (std::size_t g = 0; g < 6; ++g) {
    const std::size_t h = builtin.group->index_of(file.group->element(g));
    for (const Irrep& w : file.irreps) CHECK(w.character[g] == builtin.irrep(w.label).character[h]);
  }

  const std::string z3 =
      "field cyclotomic 3\ndimension 1\ngenerator\nz\nend\n"
      "irrep triv 1\n1\nend\nirrep a 1\nz\nend\nirrep b 1\n(-1-z)\nend\n";
  const GroupData z3data = parse_group_file(z3, "z3");
  CHECK(z3data.group->order() == 3);
  CHECK(z3data.group->field() == 3);

  auto position = [](const std::string& t) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_group_file(t, "bad");
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(position("dimension 1\n") == P{1, 1});
  CHECK(position("field rational\ndimension 1\ngenerator\n-1 0\nend\n") == P{4, 1});
  CHECK(position("field rational\ndimension 1\ngenerator\n-1\n") == P{5, 1});
  CHECK(position("field rational\ndimension 1\ngenerator\nq\nend\n") == P{4, 1});
  CHECK(position("field rational\ndimension 1\nmatrix\n") == P{3, 1});
  CHECK(position("field rational\ndimension 1\ngenerator\n-1\nend\nirrep triv\n1\nend\n") == P{6, 1});
  CHECK(position("field complex\n") == P{1, 1});

  // Missing sgn.
  CHECK_THROWS_AS(parse_group_file("field rational\ndimension 1\ngenerator\n-1\nend\nirrep triv 1\n1\nend\n", "z2"),
                  ValidationError);
  // Not a homomorphism.
  CHECK_THROWS_AS(parse_group_file("field rational\ndimension 1\ngenerator\n-1\nend\nirrep triv 1\n1\nend\n"
                                   "irrep bad 1\n2\nend\n",
                                   "z2"),
                  ValidationError);

  const JobConfig cfg = config("group_file = s3.group\nc = 1/3\n");
  CHECK(cfg.group_spec == "file:s3.group");
  CHECK(cfg.c.size() == 1);
}

TEST_CASE("run_command examples") {
  // Truncated L(triv) for Z/2 at c = 1/2 is one-dimensional in degree 0.
  const auto rows = data_rows(run("group = cyclic:2\nc = 1/2\ncutoff = 20\nirrep = triv\n", "simple-character"));
  REQUIRE(rows.size() == 21 * 2);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 4);
    CHECK(row[0] == "L(triv)");
    const bool top = row[1] == "0" && row[2] == "triv";
    CHECK(row[3] == (top ? "1" : "0"));
  }

  CHECK(data_rows(run("group = cyclic:2\nc = 1/3\n", "order")).empty());
  CHECK(data_rows(run("group = cyclic:2\nc = 1/2\n", "order")) ==
        std::vector<std::vector<std::string>>{{"triv", "sgn", "1"}});

  for (const auto& [group, half_dim] : std::vector<std::pair<std::string, std::string>>{
           {"cyclic:2", "1/2"}, {"cyclic:4", "1/2"}, {"S3", "1"}, {"dihedral:4", "1"}, {"S4", "3/2"}}) {
    const auto euler = data_rows(run("group = " + group + "\nc = 0\n", "euler"));
    std::size_t checked = 0;
    for (const auto& row : euler) {
      if (row[0] != "c_scalar") continue;
      CHECK(row[2] == half_dim);
      ++checked;
    }
    CHECK(checked == builtin_group(group).irreps.size());
  }

  const auto blocks = data_rows(run("group = S3\nc = 1/2\n", "blocks"));
  CHECK(blocks.size() == 2);

  const auto lattice = data_rows(run("group = cyclic:2\nc = 1/5\nprime = 5\nlevel = 0\nr = 0\n", "lattice-check"));
  REQUIRE(lattice.size() == 1);
  CHECK(lattice[0][3] == "fail");
  const auto chosen = data_rows(run("group = cyclic:2\nc = 1/5\nprime = 5\nlevels = 2\n", "lattice-check"));
  REQUIRE(chosen.size() == 3);
  for (const auto& row : chosen) CHECK(row[3] == "pass");

  const auto decomp = data_rows(run("group = cyclic:2\nc = 1/2\ncutoff = 8\n", "decomp-matrix"));
  CHECK(decomp == std::vector<std::vector<std::string>>{
                      {"triv", "triv", "1"}, {"triv", "sgn", "1"}, {"sgn", "triv", "0"}, {"sgn", "sgn", "1"}});

  CHECK_THROWS_AS(run("group = cyclic:2\nc = 1/2\n", "verma-weights"), ValidationError);
  CHECK_THROWS_AS(run("group = cyclic:2\nc = 1/2\n", "norm"), ValidationError);
  CHECK_THROWS_AS(run("group = cyclic:2\nc = 1/2\n", "frobnicate"), ValidationError);
}

TEST_CASE("emit_report layouts") {
  const std::string tsv = run("group = cyclic:2\nc = 1/2\ncutoff = 3\n", "simple-character");
  CHECK(tsv.rfind(std::string("# cherednik ") + kVersion + "\tsimple-character\n", 0) == 0);
  CHECK(tsv.find("# config\tgroup=cyclic:2\tfield=rational\tc=1/2\tprecision=64\tcutoff=3") != std::string::npos);
  CHECK(tsv.find("\nsimple\tdegree\tlabel\tmult\n") != std::string::npos);

  const std::string jsonl = run("group = S3\nc = 1/2\n", "blocks", ReportFormat::jsonl);
  std::istringstream in(jsonl);
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(in, line)) records.push_back(nlohmann::json::parse(line));
  REQUIRE(records.size() == 3);
  CHECK(records[0]["type"] == "header");
  CHECK(records[0]["version"] == kVersion);
  CHECK(records[0]["config"]["c"] == "1/2");
  std::set<std::string> members;
  for (std::size_t k = 1; k < records.size(); ++k) {
    CHECK(records[k]["type"] == "row");
    CHECK(records[k]["block"].is_number_integer());
    members.insert(records[k]["members"].get<std::string>());
  }
  // c(triv), c(std), c(sgn) = -1/2, 1, 5/2.
  CHECK(members == std::set<std::string>{"triv,sgn", "std"});
  // Keys keep column order.
  CHECK(jsonl.find("{\"type\":\"row\",\"block\":0,\"members\":") != std::string::npos);

  const auto norm = data_rows(run("group = cyclic:2\nc = 1/2\nprime = 5\nlevel = 1\nelement = 1/5*x1 + 25*y1^2\n", "norm"));
  REQUIRE(norm.size() == 2);
  CHECK(norm[0] == std::vector<std::string>{"1", "2", "25*y1^2", "-2"});
  CHECK(norm[1] == std::vector<std::string>{"1", "2", "1/5*x1", "-2"});
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"group = S3\nc = 1/3\ncutoff = 5\n", "singular"},
      {"group = cyclic:3\nc = 1/7, 2/7\nprime = 7\nlevels = 2\nseed = 9\n", "ws-decompose"},
      {"group = cyclic:3\nc = 1/7, 2/7\nprime = 7\nlevels = 2\nseed = 9\n", "coadmissible-check"},
      {"group = dihedral:4\nc = 1/2, 1/3\ncutoff = 4\n", "verma-weights"},
      {"group = S3\nc = 1/2\nprime = 5\nlevels = 1\nseed = 4\n", "norm"},
  };
  for (const auto& [text, command] : jobs) {
    for (ReportFormat f : {ReportFormat::tsv, ReportFormat::jsonl}) CHECK(run(text, command, f) == run(text, command, f));
  }
  // The seed selects the element.
  const std::string a = run("group = S3\nc = 1/2\nprime = 5\nseed = 1\n", "norm");
  const std::string b = run("group = S3\nc = 1/2\nprime = 5\nseed = 2\n", "norm");
  CHECK(a != b);
}

TEST_CASE("emitted elements re-parse") {
  for (const std::string group : {"cyclic:2", "cyclic:3", "S3", "dihedral:4"}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const std::string p = group == "cyclic:3" ? "7" : "5";
      const std::string c = group == "cyclic:3" ? "z, 1/7" : (group == "dihedral:4" ? "1/5, 2/3" : "3/5");
      const std::string text = "group = " + group + "\nc = " + c + "\nprime = " + p + "\nlevels = 1\nseed = " +
                               std::to_string(seed) + "\n";
      const JobConfig cfg = config(text);
      const CherednikAlgebra algebra(cfg.data.group, ReflectionFunction(*cfg.data.group, cfg.c));

      const auto euler = data_rows(run(text, "euler"));
      CHECK(parse_element(euler[0][2], algebra) == algebra.euler());
      CHECK(parse_element(euler[1][2], algebra) == algebra.euler_central());

      // Norm terms at level 0 sum to the element named in the notes.
      const Report norm = run_command(config(text, "norm"));
      const std::string element_text = norm.notes[0].substr(std::string("element ").size());
      const PBWElement x = parse_element(element_text, algebra);
      CHECK(format_element(x) == element_text);
      PBWElement sum = algebra.zero();
      for (const auto& row : norm.rows) {
        if (row[0] == "0") sum += parse_element(row[2], algebra);
      }
      CHECK(sum == x);

      PBWElement ws_sum = algebra.zero();
      for (const auto& row : run_command(config(text, "ws-decompose")).rows) {
        if (row[0] != "0") continue;
        const PBWElement comp = parse_element(row[2], algebra);
        for (const auto& [deg, part] : algebra.grade_decompose(comp)) CHECK(deg == std::stol(row[1]));
        ws_sum += comp;
      }
      CHECK(ws_sum == x);
    }
  }
}

TEST_CASE("command-line exit codes") {
  const auto good = write_temp("cherednik_good.cfg", "group = cyclic:2\nc = 1/2\ncutoff = 4\n");
  const auto unknown = write_temp("cherednik_unknown.cfg", "group = cyclic:2\nfoo = 1\n");
  const auto not_scalar = write_temp("cherednik_split.cfg", "group = cyclic:3\nc = 1/2\nprime = 5\n");
  const auto out = std::filesystem::temp_directory_path() / "cherednik_out.tsv";

  CHECK(run_binary("euler --config " + good.string()) == 0);
  CHECK(run_binary("simple-character --config " + good.string() + " --format jsonl --out " + out.string()) == 0);
  CHECK(std::filesystem::file_size(out) > 0);
  CHECK(run_binary("euler") == 1);
  CHECK(run_binary("frobnicate --config " + good.string()) == 1);
  CHECK(run_binary("euler --config " + good.string() + " --format xml") == 1);
  CHECK(run_binary("euler --config /nonexistent/cherednik.cfg") == 1);
  CHECK(run_binary("euler --config " + unknown.string()) == 2);
  CHECK(run_binary("norm --config " + not_scalar.string()) == 2);
  CHECK(run_binary("norm --config " + good.string()) == 2);
  CHECK(run_binary("simple-character --config " + (kExamples / "s3_file.cfg").string()) == 0);

  // A unipotent generator never closes up into a finite group.
  write_temp("cherednik_infinite.group", "field rational\ndimension 2\ngenerator\n1 1\n0 1\nend\n");
  const auto infinite = write_temp("cherednik_infinite.cfg", "group_file = cherednik_infinite.group\nc = 1/2\n");
  CHECK(run_binary("euler --config " + infinite.string()) == 3);
  const auto env_cmd = std::string("CHEREDNIK_PRECISION=0 ") + CHEREDNIK_CLI_PATH + " euler --config " + good.string() +
                       " >/dev/null 2>&1";
  const int status = std::system(env_cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
