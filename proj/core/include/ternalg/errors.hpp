#pragma once

#include <stdexcept>
#include <string>

namespace ternalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define TERNALG_ERROR(NAME)                        \
  struct NAME : Error {                            \
    using Error::Error;                            \
  }

TERNALG_ERROR(DimMismatch);
TERNALG_ERROR(SingularMap);
TERNALG_ERROR(DivisionByZero);
TERNALG_ERROR(ModeError);
TERNALG_ERROR(RangeError);
TERNALG_ERROR(BadOrder);

// contract violations raised by constructions whose precondition failed
TERNALG_ERROR(NotAPreLie);
TERNALG_ERROR(NotALDend);
TERNALG_ERROR(BadBase);
TERNALG_ERROR(BadRep);
TERNALG_ERROR(NotAnOOperator);
TERNALG_ERROR(NotCommuting);
TERNALG_ERROR(NotATrace);
TERNALG_ERROR(NotNijenhuis);
TERNALG_ERROR(NotADerivation);
TERNALG_ERROR(Degenerate);
TERNALG_ERROR(NotAProduct);
TERNALG_ERROR(NotAComplexStructure);
TERNALG_ERROR(NotADecomposition);
TERNALG_ERROR(NotRealizable);

#undef TERNALG_ERROR

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int l, int c)
      : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

}  // namespace ternalg
