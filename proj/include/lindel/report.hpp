#pragma once

#include <json.hpp>

#include "lindel/stretched.hpp"

namespace lindel {

using Json = nlohmann::ordered_json;

struct CommandResult {
  Json report;
  int exit_code = 0;  // 0 yes/ok, 1 mathematical no, 2 error (thrown before this)
};

struct CommandOptions {
  Budget budget;
  uint64_t seed = 0;
  std::string field_override;  // "", "Q", "F<p>"
};

RingPresentation load_presentation(const std::string& text, const CommandOptions& opt);

Json json_betti(const BettiTable& B);
Json json_koszul(const KoszulVerdict& V);
Json json_lind(const LindVerdict& V);
Json json_golod(const GolodVerdict& V);
Json json_invariants(const InvariantReport& R);
Json json_certificate(const Ring& R, const FiltrationCertificate& C);

CommandResult cmd_analyze(const std::string& ring_text, const CommandOptions& opt);
CommandResult cmd_koszul(const std::string& ring_text, int bound, const CommandOptions& opt);
CommandResult cmd_lind(const std::string& ring_text, const std::string& module, int bound,
                       const CommandOptions& opt);
CommandResult cmd_golod(const std::string& ring_text, int bound, int dbound,
                        const CommandOptions& opt);
CommandResult cmd_betti(const std::string& ring_text, int bound, int dbound,
                        const CommandOptions& opt);
CommandResult cmd_filtration_verify(const std::string& ring_text, const std::string& filt_text,
                                    bool strong, int sbound, const CommandOptions& opt);
CommandResult cmd_filtration_lift(const std::string& ring_text, const std::string& element,
                                  const std::string& filt_text, const CommandOptions& opt);
CommandResult cmd_classify(const std::string& ring_text, const CommandOptions& opt);
CommandResult cmd_qn(const std::string& ring_text, const CommandOptions& opt);
CommandResult cmd_ev(int h, int tau, int s, const CommandOptions& opt);
CommandResult cmd_semigroup(const std::vector<int>& a, const CommandOptions& opt);
CommandResult cmd_sweep_ev(int hmax, int smax, int bound, const CommandOptions& opt);
CommandResult cmd_repro(const CommandOptions& opt);

}  // namespace lindel
