#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uamasp/network.hpp"
#include "uamasp/outcome.hpp"
#include "uamasp/scenario.hpp"
#include "uamasp/validate.hpp"

namespace uamasp {

enum class Actor { Manager, Uatm, UatmNetwork };

const char* actor_name(Actor a);

struct DialogueTurn {
  Actor actor = Actor::Manager;
  std::string utterance;
  std::optional<std::string> query;
  std::optional<Outcome> outcome;
  bool error = false;
};

struct LatestModel {
  std::string scenario;
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::vector<GroundAtom> projected;
  std::optional<ValidationReport> validation;
};

/// Agents reached only through another UATM: uncovered_by_uatm1 for a
/// detour, covered_by_other for a round trip.
std::vector<std::int64_t> relayed_agents(const Outcome& o);

/// One manager/UATM conversation over a pinned or unpinned scenario. Every
/// action appends a manager request turn followed by one uatm response turn.
class Session {
 public:
  explicit Session(Scenario base);

  const Scenario& scenario() const { return base_; }
  const VertiportNetwork& network() const { return network_; }
  const std::vector<DialogueTurn>& history() const { return history_; }
  const std::vector<std::string>& commands() const { return commands_; }
  const LatestModel& latest() const { return latest_; }

  /// Snapshots of the first model of the session's own scenario.
  const std::vector<AgentSnapshot>& agents() const { return agents_; }

  std::vector<DialogueTurn> report_congestion(std::int64_t from, std::int64_t to);
  std::vector<DialogueTurn> clear_corridor(std::int64_t from, std::int64_t to, std::int64_t behind);

  void record_command(std::string line) { commands_.push_back(std::move(line)); }

 private:
  std::vector<DialogueTurn> respond(DialogueTurn request, const Scenario& s, const std::string& responder,
                                    const std::string& action);
  std::vector<DialogueTurn> refuse(DialogueTurn request, const std::string& reason);
  std::string owner_of(std::int64_t vertiport) const;

  Scenario base_;
  VertiportNetwork network_;
  std::vector<AgentSnapshot> agents_;
  std::vector<DialogueTurn> history_;
  std::vector<std::string> commands_;
  LatestModel latest_;
};

Session open_session(const std::string& scenario_name, const std::vector<Pin>& pins);

struct DispatchResult {
  std::vector<DialogueTurn> turns;
  std::string text;
  bool quit = false;
};

std::string repl_help();
std::string render_turn(const DialogueTurn& t);

/// Executes one REPL line against the session. Unknown commands return the
/// help text; actions return their turns rendered into `text` as well.
DispatchResult repl_dispatch(const std::string& command, Session& session);

}  // namespace uamasp
