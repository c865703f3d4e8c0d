// End-to-end proving: unfold, enumerate linkings, contract, extract readings.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dispnet/contraction.hpp"
#include "dispnet/lexicon.hpp"
#include "dispnet/nd.hpp"
#include "dispnet/proof_structure.hpp"

namespace dispnet {

struct Hypothesis {
  StringTerm term;
  Formula formula;
  std::vector<int> origins;
};

struct Problem {
  std::vector<Hypothesis> hypotheses;
  Formula goal;
  AcceptMode mode = AcceptMode::Net;
  std::optional<Expected> expected;  // required in parse mode
};

struct SolveOptions {
  bool all = false;             // exhaust linkings instead of stopping at the first reading
  int jobs = 1;                 // worker threads checking candidate structures
  bool keep_rejections = false;
  bool extract = true;          // build the natural deduction proof of each reading
};

struct Reading {
  std::uint64_t linking = 0;
  ProofStructure structure;
  Trace trace;
  std::optional<NDProof> proof;
};

struct Rejection {
  std::uint64_t linking = 0;
  ProofStructure structure;
  std::vector<Diagnostic> diagnostics;
};

struct SolveResult {
  std::vector<CountMismatch> mismatches;
  std::uint64_t linkings_total = 0;
  std::uint64_t linkings_tried = 0;
  std::vector<Reading> readings;
  std::vector<Rejection> rejections;
  int duplicates = 0;  // readings equal to an earlier one as proofs
};

SolveResult solve(const Problem& problem, const SolveOptions& options = {});

struct AssignmentResult {
  LexicalAssignment assignment;
  SolveResult result;
};

struct ParseResult {
  std::vector<std::string> tokens;
  Formula goal;
  AcceptMode mode = AcceptMode::Parse;
  std::vector<AssignmentResult> assignments;
  std::size_t reading_count() const;
};

ParseResult parse_sentence(const Grammar& g, const std::string& sentence, const std::optional<Formula>& goal,
                           AcceptMode mode, const SolveOptions& options = {});

// "term:formula, ... |- [term:]formula"
Problem parse_sequent(const std::string& text, const Signature& sig);

}  // namespace dispnet
