#pragma once

#include <stdexcept>
#include <string>

namespace sfdepth {

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyFamily : std::runtime_error {
  explicit EmptyFamily(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownVariable : std::runtime_error {
  explicit UnknownVariable(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

struct UnrealizableGraph : std::runtime_error {
  explicit UnrealizableGraph(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationExhausted : std::runtime_error {
  explicit GenerationExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfdepth
