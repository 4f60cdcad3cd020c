// Command-line front end for the three-hat library.
//
// Exit codes: 0 success, 1 invalid input (or failed verification),
// 2 solve produced an empty solution set.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "threehat/jsonio.hpp"
#include "threehat/threehat.hpp"

namespace {

using namespace threehat;

Seat parse_seat(const std::string& text) {
  const auto seat = text.size() == 1 ? seat_from_letter(text[0]) : std::nullopt;
  if (!seat) throw std::invalid_argument("seat must be A, B or C, got '" + text + "'");
  return *seat;
}

int run_simulate(std::int64_t a, std::int64_t b, std::int64_t c, bool trace,
                 bool json) {
  const Configuration s(a, b, c);
  if (trace) {
    const GameTrace g = full_trace(s);
    if (json) {
      std::cout << trace_json(s, g).dump(2) << '\n';
    } else {
      std::cout << render_trace(g);
    }
  } else {
    const Transcript t = simulate(s);
    if (json) {
      std::cout << transcript_json(s, t).dump(2) << '\n';
    } else {
      std::cout << render_transcript(t);
    }
  }
  return 0;
}

int run_chain(std::int64_t a, std::int64_t b, std::int64_t c,
              const std::optional<std::string>& seat) {
  const Configuration s(a, b, c);
  const Configuration target =
      seat ? working_configuration(s, parse_seat(*seat)) : s;
  std::cout << to_string(build_chain(target)) << '\n';
  return 0;
}

int run_solve(const std::optional<std::string>& transcript,
              const std::optional<std::string>& declarer,
              const std::optional<std::int64_t>& turns,
              const std::optional<std::int64_t>& value,
              const std::optional<std::int64_t>& max_sum, bool json) {
  PuzzleQuery query;
  if (transcript) {
    if (declarer || turns || value) {
      throw std::invalid_argument(
          "--transcript cannot be combined with --declarer/--turns/--value");
    }
    const TranscriptPattern pattern = parse_transcript(*transcript);
    query = {pattern.declarer(), pattern.turns, pattern.value, max_sum};
  } else {
    if (!declarer || !turns) {
      throw std::invalid_argument(
          "either --transcript or both --declarer and --turns are required");
    }
    query = {parse_seat(*declarer), *turns, value, max_sum};
  }

  const SolutionSet solutions = solve(query);
  if (json) {
    std::cout << solutions_json(solutions).dump(2) << '\n';
  } else {
    std::cout << render_solutions(solutions);
  }
  return solutions.empty() ? 2 : 0;
}

int run_verify(std::int64_t max_entry, bool json) {
  if (max_entry < 2) throw std::invalid_argument("--max must be at least 2");
  const VerifyReport report = run_verification(max_entry);
  if (json) {
    std::cout << verify_json(report).dump(2) << '\n';
  } else {
    std::cout << render_verify(report);
  }
  return report.all_passed() ? 0 : 1;
}

int run_two_hat(std::int64_t a, std::int64_t b) {
  const TwoHatInstance inst(a, b);
  std::cout << render_two_hat(two_hat_simulate(inst));
  return 0;
}

int run_color_hat(const std::string& hats_text) {
  std::vector<HatColor> hats;
  hats.reserve(hats_text.size());
  for (char c : hats_text) {
    switch (c) {
      case 'R': case 'r': hats.push_back(HatColor::red); break;
      case 'B': case 'b': hats.push_back(HatColor::blue); break;
      default:
        throw std::invalid_argument(std::string("hats must be R or B, got '") +
                                    c + "'");
    }
  }
  const ColorHatInstance inst(std::move(hats));
  std::cout << render_color_hat(color_hat_simulate(inst));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-hat puzzle: simulator, solver and verifier"};
  app.require_subcommand(1);

  std::int64_t sim_a = 0, sim_b = 0, sim_c = 0;
  bool sim_trace = false, sim_json = false;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Play one game with the given numbers for A, B, C");
  sim->add_option("a", sim_a, "Player A's number")->required();
  sim->add_option("b", sim_b, "Player B's number")->required();
  sim->add_option("c", sim_c, "Player C's number")->required();
  sim->add_flag("--trace", sim_trace, "Show each player's remaining chain per turn");
  sim->add_flag("--json", sim_json, "Emit JSON instead of text");

  std::int64_t chain_a = 0, chain_b = 0, chain_c = 0;
  std::optional<std::string> chain_seat;
  CLI::App* chain = app.add_subcommand(
      "chain", "Print the reduction chain of a configuration");
  chain->add_option("a", chain_a, "Player A's number")->required();
  chain->add_option("b", chain_b, "Player B's number")->required();
  chain->add_option("c", chain_c, "Player C's number")->required();
  chain->add_option("--seat", chain_seat,
                    "Chain of this player's working configuration (A|B|C)");

  std::optional<std::string> solve_transcript_text, solve_declarer;
  std::optional<std::int64_t> solve_turns, solve_value, solve_max_sum;
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand(
      "solve", "Find all configurations matching an observed game");
  solve->add_option("--transcript", solve_transcript_text,
                    "Pattern like \"P,P,P,D=50\" (exactly one D, last)");
  solve->add_option("--declarer", solve_declarer, "Declaring seat (A|B|C)");
  solve->add_option("--turns", solve_turns, "Turn the declaration happened on");
  solve->add_option("--value", solve_value, "Declared number");
  solve->add_option("--max-sum", solve_max_sum,
                    "Search bound when no value is given");
  solve->add_flag("--json", solve_json, "Emit JSON instead of text");

  std::int64_t verify_max = 300;
  bool verify_json_flag = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Exhaustively check the engine properties up to a bound");
  verify->add_option("--max", verify_max, "Largest entry to check (default 300)");
  verify->add_flag("--json", verify_json_flag, "Emit JSON instead of text");

  std::int64_t two_a = 0, two_b = 0;
  CLI::App* twohat = app.add_subcommand(
      "twohat", "Consecutive-integers variant with two players");
  twohat->add_option("a", two_a, "Player 1's number")->required();
  twohat->add_option("b", two_b, "Player 2's number")->required();

  std::string color_hats;
  CLI::App* colorhat = app.add_subcommand(
      "colorhat", "Red/blue variant with simultaneous rounds");
  colorhat->add_option("hats", color_hats, "Hat colors, e.g. RBB")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*sim) return run_simulate(sim_a, sim_b, sim_c, sim_trace, sim_json);
    if (*chain) return run_chain(chain_a, chain_b, chain_c, chain_seat);
    if (*solve) {
      return run_solve(solve_transcript_text, solve_declarer, solve_turns,
                       solve_value, solve_max_sum, solve_json);
    }
    if (*verify) return run_verify(verify_max, verify_json_flag);
    if (*twohat) return run_two_hat(two_a, two_b);
    if (*colorhat) return run_color_hat(color_hats);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
