#include <doctest.h>

#include <sstream>

#include "veralgo/commands.hpp"
#include "veralgo/faults.hpp"
#include "veralgo/fixtures.hpp"
#include "veralgo/fuzz.hpp"

using namespace veralgo;

namespace {

cli::RunConfig base_config() {
  cli::RunConfig config;
  config.command = "check";
  return config;
}

std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("pristine fuzzing finds no divergence") {
  fuzz::FuzzOptions opt;
  opt.cases = 30;
  CHECK_FALSE(fuzz::fuzz_heap(opt).has_value());
  CHECK_FALSE(fuzz::fuzz_hash_set(opt).has_value());
  CHECK_FALSE(fuzz::fuzz_tree_set(opt).has_value());
  CHECK_FALSE(fuzz::fuzz_matching(opt).has_value());
  CHECK_FALSE(fuzz::fuzz_placement(opt).has_value());
  CHECK_FALSE(fuzz::fuzz_topsort(opt).has_value());
  CHECK_FALSE(fuzz::fuzz_euler(opt).has_value());
}

TEST_CASE("fuzzing is deterministic for a fixed seed") {
  fuzz::FuzzOptions opt;
  opt.cases = 10;
  faults::ScopedFault fault(faults::Fault::HeapChildComparisonFlipped);
  auto first = fuzz::fuzz_heap(opt);
  auto second = fuzz::fuzz_heap(opt);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->case_index == second->case_index);
  CHECK(first->detail == second->detail);
  CHECK(first->trace == second->trace);
}

TEST_CASE("every armed fault is caught by a contract or oracle check") {
  fuzz::FuzzOptions opt;
  opt.cases = 60;
  {
    faults::ScopedFault fault(faults::Fault::HeapChildComparisonFlipped);
    CHECK(fuzz::fuzz_heap(opt).has_value());
  }
  {
    faults::ScopedFault fault(faults::Fault::TombstoneWrittenAsNil);
    CHECK(fuzz::fuzz_hash_set(opt).has_value());
  }
  {
    faults::ScopedFault fault(faults::Fault::BstDeleteSkipsRestore);
    CHECK(fuzz::fuzz_tree_set(opt).has_value());
  }
  {
    faults::ScopedFault fault(faults::Fault::MatchingSkipsRejection);
    CHECK(fuzz::fuzz_matching(opt).has_value());
  }
  {
    faults::ScopedFault fault(faults::Fault::EulerSpliceOffByOne);
    CHECK(fuzz::fuzz_euler(opt).has_value());
  }
}

TEST_CASE("fixture suite passes in every mode") {
  for (ContractMode mode :
       {ContractMode::Off, ContractMode::Assert, ContractMode::Log}) {
    auto outcomes = fixtures::run_all(mode);
    CHECK(outcomes.size() == 10);
    for (const auto& outcome : outcomes) {
      INFO(outcome.name, ": ", outcome.detail);
      CHECK(outcome.passed);
      if (mode == ContractMode::Off) {
        CHECK(outcome.checks == 0);
      } else {
        CHECK(outcome.checks > 0);
        CHECK(outcome.violations == 0);
      }
    }
  }
}

TEST_CASE("check command reports the fixture census") {
  std::ostringstream out;
  cli::RunConfig config = base_config();
  CHECK(cli::cmd_check(config, out) == 0);
  CHECK(out.str().find("[ ok ] integer-division") != std::string::npos);
  CHECK(out.str().find("10 fixture groups") != std::string::npos);
}

TEST_CASE("check command fails loudly under an armed heap fault") {
  std::ostringstream out;
  std::ostringstream err;
  cli::RunConfig config = base_config();
  config.fault = faults::Fault::HeapChildComparisonFlipped;
  CHECK(cli::run(config, out, err) == 1);
  CHECK(out.str().find("[FAIL] priority-queue") != std::string::npos);
  CHECK(out.str().find("heapifyDownInv") != std::string::npos);
  CHECK(faults::active() == faults::Fault::None);  // disarmed afterwards
}

TEST_CASE("solve command on the bundled instances") {
  std::ostringstream err;
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "solve";
    config.problem = "sort";
    config.input = data_path("sort_sample.txt");
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str() == "3 4 6 8 9\n");
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "solve";
    config.problem = "topsort";
    config.input = data_path("dag_chain.txt");
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str() == "1 2 3\n");
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "solve";
    config.problem = "euler";
    config.input = data_path("euler_fixture.txt");
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str() == "1 2 3 4 5 3 1\n");
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "solve";
    config.problem = "match";
    config.input = data_path("match_basic.txt");
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str() == "1 -> 1\n2 -> 2\n");
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "solve";
    config.problem = "place";
    config.input = data_path("place_one.txt");
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str() == "1 -> 2\n2 -> 1\n");
  }
}

TEST_CASE("solve reports cycles and parse failures as input errors") {
  std::ostringstream out;
  std::ostringstream err;
  cli::RunConfig config = base_config();
  config.command = "solve";
  config.problem = "topsort";
  config.input = data_path("cyclic.txt");
  CHECK(cli::run(config, out, err) == 2);
  CHECK(err.str().find("cycle") != std::string::npos);

  std::ostringstream err2;
  config.input = "/nonexistent/input.txt";
  CHECK(cli::run(config, out, err2) == 2);
}

TEST_CASE("verify certifies and rejects") {
  std::ostringstream err;
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "verify";
    config.problem = "topsort";
    config.input = data_path("dag_chain.txt");
    config.solution = data_path("chain_solution.txt");
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str() == "certified\n");
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "verify";
    config.problem = "topsort";
    config.input = data_path("dag_chain.txt");
    config.solution = data_path("chain_bad_solution.txt");
    CHECK(cli::run(config, out, err) == 1);
    CHECK(out.str().find("isTopSorting") != std::string::npos);
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "verify";
    config.problem = "euler";
    config.input = data_path("euler_fixture.txt");
    config.solution = data_path("euler_fixture_solution.txt");
    CHECK(cli::run(config, out, err) == 0);
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "verify";
    config.problem = "trail";
    config.input = data_path("trail_fixture.txt");
    config.solution = data_path("trail_fixture_solution.txt");
    CHECK(cli::run(config, out, err) == 0);
  }
  {
    std::ostringstream out;
    cli::RunConfig config = base_config();
    config.command = "verify";
    config.problem = "match";
    config.input = data_path("match_basic.txt");
    config.solution = data_path("match_basic_solution.txt");
    CHECK(cli::run(config, out, err) == 0);
  }
}

TEST_CASE("fuzz command reports agreement and divergence") {
  {
    std::ostringstream out;
    std::ostringstream err;
    cli::RunConfig config = base_config();
    config.command = "fuzz";
    config.problem = "treeset";
    config.cases = 20;
    CHECK(cli::run(config, out, err) == 0);
    CHECK(out.str().find("OK") != std::string::npos);
  }
  {
    std::ostringstream out;
    std::ostringstream err;
    cli::RunConfig config = base_config();
    config.command = "fuzz";
    config.problem = "heap";
    config.cases = 40;
    config.fault = faults::Fault::HeapChildComparisonFlipped;
    CHECK(cli::run(config, out, err) == 1);
    CHECK(out.str().find("replay:") != std::string::npos);
  }
  {
    std::ostringstream out;
    std::ostringstream err;
    cli::RunConfig config = base_config();
    config.command = "fuzz";
    config.problem = "nonsense";
    CHECK(cli::run(config, out, err) == 2);
  }
}

TEST_CASE("report prints one row per fixture group plus a total") {
  std::ostringstream out;
  cli::RunConfig config = base_config();
  config.command = "report";
  CHECK(cli::cmd_report(config, out) == 0);
  std::string text = out.str();
  for (const char* name :
       {"integer-division", "power", "binary-search", "insertion-sort",
        "priority-queue", "hash-set", "tree-set", "stable-matching",
        "topological-sort", "euler-circuit", "TOTAL"}) {
    INFO(name);
    CHECK(text.find(name) != std::string::npos);
  }
}
