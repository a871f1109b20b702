#pragma once

#include <stdexcept>
#include <string>

namespace gkforge {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// group engine
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& w) : Error(w) {}
};
struct MalformedPermutation : Error {
    explicit MalformedPermutation(const std::string& w) : Error(w) {}
};
struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& w) : Error(w) {}
};
struct NotNormal : Error {
    explicit NotNormal(const std::string& w) : Error(w) {}
};
struct NotSolvable : Error {
    explicit NotSolvable(const std::string& w) : Error(w) {}
};
struct NotAnAutomorphism : Error {
    explicit NotAnAutomorphism(const std::string& w) : Error(w) {}
};
struct InconsistentAction : Error {
    explicit InconsistentAction(const std::string& w) : Error(w) {}
};

// graph engine
struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& w) : Error(w) {}
};
struct NotConnected : Error {
    explicit NotConnected(const std::string& w) : Error(w) {}
};
struct NotDisconnected : Error {
    explicit NotDisconnected(const std::string& w) : Error(w) {}
};
struct NoCutVertex : Error {
    explicit NoCutVertex(const std::string& w) : Error(w) {}
};

// prime graph analysis
struct NotACutSet : Error {
    explicit NotACutSet(const std::string& w) : Error(w) {}
};
struct MoreThanTwoComponents : Error {
    explicit MoreThanTwoComponents(const std::string& w) : Error(w) {}
};

// descriptor family
struct InvalidDescriptor : Error {
    explicit InvalidDescriptor(const std::string& w) : Error(w) {}
};

// corpus / IO
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};
struct DuplicateName : Error {
    explicit DuplicateName(const std::string& w) : Error(w) {}
};
struct IoError : Error {
    explicit IoError(const std::string& w) : Error(w) {}
};

} // namespace gkforge
