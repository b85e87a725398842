#include "qav/check_report.hpp"

#include <stdexcept>

namespace qav {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
    case Verdict::ProbablePass:
      return "PROBABLE-PASS";
    case Verdict::NecessaryConditionsHold:
      return "NECESSARY-CONDITIONS-HOLD";
  }
  throw std::logic_error("bad verdict");
}

Verdict verdictFromName(const std::string& name) {
  if (name == "PASS") return Verdict::Pass;
  if (name == "FAIL") return Verdict::Fail;
  if (name == "INCONCLUSIVE") return Verdict::Inconclusive;
  if (name == "PROBABLE-PASS") return Verdict::ProbablePass;
  if (name == "NECESSARY-CONDITIONS-HOLD") return Verdict::NecessaryConditionsHold;
  throw std::invalid_argument("unknown verdict '" + name + "'");
}

int verdictExitCode(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return 0;
    case Verdict::Fail:
      return 1;
    case Verdict::Inconclusive:
    case Verdict::ProbablePass:
    case Verdict::NecessaryConditionsHold:
      return 3;
  }
  throw std::logic_error("bad verdict");
}

}  // namespace qav
