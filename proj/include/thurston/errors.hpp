#pragma once

#include <stdexcept>
#include <string>

namespace thurston {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// moebius
struct NonUnimodular : Error { using Error::Error; };
struct NotParabolic : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct ClassifyAmbiguous : Error { using Error::Error; };
struct DegenerateTuple : Error { using Error::Error; };

// marked_group
struct InvalidGroup : Error { using Error::Error; };
struct InvalidMarking : Error { using Error::Error; };
struct NonRealRoot : Error { using Error::Error; };
struct IndiscreteSuspected : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// spectra
struct TypeMismatch : Error { using Error::Error; };
struct NoHyperbolicFound : Error { using Error::Error; };
struct NoParabolicAboveOne : Error { using Error::Error; };
struct WrongNormalization : Error { using Error::Error; };

// boundary
struct EllipticInput : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct DegenerateWindow : Error { using Error::Error; };

// io / cli
struct ParseError : Error { using Error::Error; };

}  // namespace thurston
