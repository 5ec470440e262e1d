#pragma once

// A small expression language over Weil-group representations:
//   [12]  [12,1/2]  [+]  [-,1]  a (*) b  a (+) b  sym^3(a)  wedge2(a)
// and the queries eps(a), gamma(a), logcond(a) at the top level.

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "lfam/errors.hpp"
#include "lfam/weil.hpp"

namespace lfam::weil {

class ParseError : public DomainError {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Query { None, Epsilon, Gamma, LogConductor };

struct Evaluation {
  WeilRep rep;
  Query query = Query::None;

  // The query result, or the canonical decomposition when there is no query.
  std::string text() const;
  nlohmann::json to_json(const std::string& expression) const;
};

Evaluation evaluate(const std::string& expression);

}  // namespace lfam::weil
