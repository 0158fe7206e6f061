#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "corrchan/config.hpp"
#include "corrchan/csv.hpp"

using namespace corrchan;

TEST_CASE("config parsing with sections and comments") {
  const std::string text = R"(
# sweep for the second order experiment
[experiment]
delta_t = 5e-4   # seconds
p_c = 0.8
[sweep]
protocol = second
tau_points = 10
[errors]
seed = 7
)";
  const RunConfig c = parse_config_text(text);
  CHECK(c.experiment.delta_t == 5e-4);
  CHECK(c.experiment.p_C == 0.8);
  CHECK(c.experiment.J_CH == 129.6);  // untouched default
  CHECK(c.protocol == "second");
  CHECK(c.tau_points == 10);
  CHECK(c.errors.seed == 7);
  CHECK(c.tau_grid().size() == 10);
  CHECK(c.tau_grid()[1] == 2e-6);
}

TEST_CASE("config rejects unknown keys and bad values") {
  CHECK_THROWS_AS(parse_config_text("[experiment]\nbanana = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[mystery]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("delta_t = 1e-4\n"), ConfigError);  // no section
  CHECK_THROWS_AS(parse_config_text("[experiment]\ndelta_t = fast\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[experiment]\ndelta_t\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[sweep]\nprotocol = fifth\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[sweep]\nprotocol = custom\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[sweep]\ntau_points = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[experiment]\ndelta_t = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[sweep]\ncoupling_mode = maybe\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[sweep]\nadd_noise = yes\n"), ConfigError);
}

TEST_CASE("config formatting round trips every field") {
  RunConfig c;
  c.experiment.delta_t = 1.25e-4;
  c.experiment.p_H = 1.0 / 3.0;
  c.errors.readout_sigma = 3.3e-4;
  c.errors.seed = 12345;
  c.protocol = "fourth";
  c.tau32 = 7e-6;
  c.coupling_mode = CouplingMode::CouplingPlusBathDrive;
  c.add_noise = true;
  c.output = "out.csv";
  const RunConfig back = parse_config_text(format_config(c));
  CHECK(format_config(back) == format_config(c));
  CHECK(back.experiment.p_H == c.experiment.p_H);
  CHECK(back.coupling_mode == CouplingMode::CouplingPlusBathDrive);
  CHECK(back.output == "out.csv");
}

TEST_CASE("csv formatting keeps full precision and round trips") {
  CsvTable t;
  t.comments = {"generated by unit test", "delta_t = 0.0005"};
  t.header = {"tau", "signal"};
  t.rows = {{2e-6, 0.12345678901234567}, {4e-6, -1.0 / 3.0}};
  const std::string text = format_csv(t);
  const CsvTable back = parse_csv(text);
  REQUIRE(back.rows.size() == 2);
  CHECK(back.header == t.header);
  CHECK(back.comments == t.comments);
  CHECK(back.rows[0][1] == t.rows[0][1]);  // bit-exact through text
  CHECK(back.rows[1][1] == t.rows[1][1]);
  CHECK_THROWS_AS(parse_csv("a,b\n1,oops\n"), IoError);
  CsvTable bad = t;
  bad.rows.push_back({1.0});
  CHECK_THROWS_AS(format_csv(bad), IoError);
}

TEST_CASE("atomic csv write leaves no temporary behind") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "corrchan_csv_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "table.csv").string();
  CsvTable t;
  t.header = {"x"};
  t.rows = {{42.0}};
  write_csv_atomic(path, t);
  const CsvTable back = read_csv(path);
  CHECK(back.rows[0][0] == 42.0);
  CHECK(!std::filesystem::exists(path + ".tmp"));
  // Overwrite is atomic too.
  t.rows[0][0] = 43.0;
  write_csv_atomic(path, t);
  CHECK(read_csv(path).rows[0][0] == 43.0);
  CHECK_THROWS_AS(write_csv_atomic((dir / "missing" / "x.csv").string(), t),
                  IoError);
  CHECK_THROWS_AS(read_csv((dir / "absent.csv").string()), IoError);
  std::filesystem::remove_all(dir);
}
