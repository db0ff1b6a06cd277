#pragma once

/**
 * @file sequence_json.hpp
 * @brief Sequence-spec documents and report serialization.
 *
 * Spec documents:
 *
 *     {"type":"linear","coeffs":[1,1],"initial":[0,1]}
 *     {"type":"nonlinear","k":1,"sign":1,"poly":[{"exps":[2],"c":1}],"initial":[1,1]}
 *     {"type":"polynomial","poly":[1,0,1]}
 *
 * Integers may be JSON numbers or decimal strings (for values beyond 64
 * bits).  Unknown fields are rejected.
 */

#include <string>
#include <string_view>

#include <json.hpp>

#include "recurseq/errors.hpp"
#include "recurseq/prime_divisors.hpp"
#include "recurseq/recurrences.hpp"

namespace recurseq {

// Malformed spec document; the message names the offending location
// (line/column for syntax errors, JSON pointer for schema errors).
class SpecError : public DomainError {
public:
    using DomainError::DomainError;
};

SequenceSource parse_sequence_spec(std::string_view text);
SequenceSource sequence_from_json(const nlohmann::json& doc);
nlohmann::json sequence_to_json(const SequenceSource& src);

nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& v, const std::string& where = "");

nlohmann::json report_to_json(const DivisorReport& report);
DivisorReport report_from_json(const nlohmann::json& doc);

}  // namespace recurseq
