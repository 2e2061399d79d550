#ifndef PARAKERNEL_COMMANDS_HPP
#define PARAKERNEL_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "parakernel/io.hpp"
#include "parakernel/kernels.hpp"
#include "parakernel/oracle.hpp"
#include "parakernel/resolution.hpp"

// One function per CLI subcommand. Each renders its result as text or as a
// JSON envelope {"schema": 1, "command": ..., ...}; decision commands also
// report the yes/no answer so callers can map it to an exit status.

namespace parakernel::commands {

struct CommandOptions {
  EnumerationLimits enumeration;
  SaturationLimits saturation;
  bool use_oracle = false;
  bool json = false;
};

struct CommandResult {
  std::string output;
  std::optional<bool> decision;
};

enum class EntailmentMode { Para, Semantic, Classical };

CommandResult run_kernels(const io::InputDocument& doc, const CommandOptions& opts);
CommandResult run_semikernels(const io::InputDocument& doc, const CommandOptions& opts);
CommandResult run_models(const io::InputDocument& doc, const CommandOptions& opts);
CommandResult run_paradox(const io::InputDocument& doc, const CommandOptions& opts);
CommandResult run_subdiscourse(const io::InputDocument& doc, const CommandOptions& opts);
CommandResult run_closure(const io::InputDocument& doc, const CommandOptions& opts);
CommandResult run_min(const io::InputDocument& doc, const CommandOptions& opts);

CommandResult run_prove(const io::InputDocument& doc, const std::string& clause, Weakening mode,
                        const CommandOptions& opts);
CommandResult run_entails(const io::InputDocument& doc, const std::string& clause,
                          EntailmentMode mode, const CommandOptions& opts);
CommandResult run_relevant(const io::InputDocument& doc, const std::string& clause,
                           const CommandOptions& opts);

/// Differential run over `count` graphs with seeds seed, seed+1, ...:
/// engine vs oracle on kernels, semikernels, models and classical models.
/// The decision is true when nothing differs.
CommandResult run_check_random(const oracle::RandomGraphSpec& first, std::size_t count,
                               const CommandOptions& opts);

}  // namespace parakernel::commands

#endif
