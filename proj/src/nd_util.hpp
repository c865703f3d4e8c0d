// String equation helpers shared by the checker and the net translations.
#pragma once

#include <optional>

#include "dispnet/terms.hpp"

namespace dispnet {

std::optional<std::size_t> find_sub(const StringTerm& hay, const StringTerm& needle);
StringTerm replace_at(const StringTerm& hay, std::size_t pos, std::size_t len, const StringTerm& with);
bool has_prefix(const StringTerm& t, const StringTerm& p);
bool has_suffix(const StringTerm& t, const StringTerm& s);
StringTerm slice(const StringTerm& t, std::size_t b, std::size_t e);

// gamma with whole == wrap(alpha, k, gamma)
std::optional<StringTerm> solve_circumfix(const StringTerm& alpha, Mode k, const StringTerm& whole);
// gamma with whole == wrap(gamma, k, beta)
std::optional<StringTerm> solve_infix(const StringTerm& whole, Mode k, const StringTerm& beta);

}  // namespace dispnet
