#pragma once

#include "kch/cli/cli.hpp"
#include "kch/dga/dga.hpp"

namespace kch::cli {

// Requests are normalized json objects; each returns the "result" member of
// the output envelope.
BraidWord request_braid(const json &input);
DgaMode request_mode(const json &input);

json cmd_dga(const json &input);
json cmd_d2_check(const json &input);
json cmd_aug_count(const json &input, bool enumerate);
json cmd_linhom(const json &input);
json cmd_augpoly(const json &input);
json cmd_homfly_check(const json &input);
json cmd_compare_transverse(const json &input);
json cmd_examples(const json &input);

/// True when a result reports a failed check (exit code 1).
bool result_failed(const std::string &command, const json &result);

/// Full twist check: phi_B(a_ij) = a_ij for all chords on the braid's strands.
bool phi_is_identity(const BraidWord &b);

} // namespace kch::cli
