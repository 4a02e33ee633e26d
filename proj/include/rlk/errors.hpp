#pragma once

#include <stdexcept>
#include <string>

namespace rlk {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct LayerMismatch : Error {
    explicit LayerMismatch(const std::string& what) : Error(what) {}
};

struct InvalidComplement : Error {
    explicit InvalidComplement(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct InvalidBlocks : Error {
    explicit InvalidBlocks(const std::string& what) : Error(what) {}
};

struct InvalidSplit : Error {
    explicit InvalidSplit(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error(what) {}
};

struct ValueError : Error {
    explicit ValueError(const std::string& what) : Error(what) {}
};

struct MissingSides : Error {
    explicit MissingSides(const std::string& what) : Error(what) {}
};

struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace rlk
