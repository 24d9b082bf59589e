#include "markedbases/reduction.hpp"

namespace mb {

namespace {

std::string not_stable_message(const MonomialIdeal& J) {
  std::string msg = "J = " + J.to_string() + " is not strongly stable";
  if (auto mv = J.stability_violation()) {
    const Ring& r = J.ring();
    msg += " (move " + format_term(mv->source, r) + " -> " + format_term(mv->target, r) + ", replacing " +
           r.name(mv->from) + " by " + r.name(mv->to) + ", leaves J)";
  }
  msg += "; marked reduction is not Noetherian over such J and is refused";
  return msg;
}

}  // namespace

NotStronglyStable::NotStronglyStable(const MonomialIdeal& J)
    : std::domain_error(not_stable_message(J)), move_(J.stability_violation()) {}

}  // namespace mb
