#pragma once

#include <stdexcept>
#include <string>

namespace interp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class InvalidDomain : public Error { public: using Error::Error; };
class InvalidArgument : public Error { public: using Error::Error; };
class NotMultiple : public Error { public: using Error::Error; };
class NonPositiveWeight : public Error { public: using Error::Error; };
class NotPositiveDefinite : public Error { public: using Error::Error; };
class ZeroColumn : public Error { public: using Error::Error; };
class Infeasible : public Error { public: using Error::Error; };
class SimplexCycling : public Error { public: using Error::Error; };
class NumericalBreakdown : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class MissingColumn : public Error { public: using Error::Error; };

}  // namespace interp
