#pragma once

#include <stdexcept>
#include <string>

namespace domrecon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph input: loops, out-of-range endpoints, bad file records.
class InvalidGraph : public Error {
public:
    using Error::Error;
};

// Vertex cap, enumeration bound or |M(G)| cap exceeded.
class SizeLimit : public Error {
public:
    using Error::Error;
};

class NotDominating : public Error {
public:
    using Error::Error;
};

class NotMinimal : public Error {
public:
    using Error::Error;
};

class UniversalVertexPresent : public Error {
public:
    using Error::Error;
};

// Bad family spec, corpus source or theorem parameters.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

}  // namespace domrecon
