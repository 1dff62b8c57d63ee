#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icdrr {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- corpus ------------------------------------------------------------

class MalformedCode : public Error {
public:
    explicit MalformedCode(const std::string& raw)
        : Error("malformed ICD-10-CM code: '" + raw + "'"), raw_(raw) {}
    const std::string& raw() const { return raw_; }

private:
    std::string raw_;
};

class EmptyCorpus : public Error {
public:
    EmptyCorpus() : Error("corpus contains no valid entries") {}
};

/// Raised when more than the tolerated fraction of rows is malformed.
class CorpusRejected : public Error {
public:
    CorpusRejected(std::size_t malformed, std::size_t total)
        : Error("corpus rejected: " + std::to_string(malformed) + " of " +
                std::to_string(total) + " rows malformed") {}
};

// -- retrieval ---------------------------------------------------------

class UnknownDoc : public Error {
public:
    explicit UnknownDoc(std::size_t doc_id)
        : Error("unknown document id: " + std::to_string(doc_id)) {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("embedding dimension mismatch: " + std::to_string(lhs) +
                " vs " + std::to_string(rhs)) {}
};

class EmptyTokenList : public Error {
public:
    EmptyTokenList() : Error("token list is empty") {}
};

class EmptyQuery : public Error {
public:
    EmptyQuery() : Error("query tokenizes to no tokens") {}
};

class ProviderUnavailable : public Error {
public:
    using Error::Error;
};

// -- persistence -------------------------------------------------------

class IoError : public Error {
public:
    using Error::Error;
};

class VersionMismatch : public Error {
public:
    explicit VersionMismatch(unsigned got)
        : Error("unsupported index version: " + std::to_string(got)) {}
};

class CorruptIndex : public Error {
public:
    using Error::Error;
};

// -- rerank ------------------------------------------------------------

/// The model response contained no usable code. Carries the verbatim
/// response so callers can log it and fall back.
class NoCodeFound : public Error {
public:
    explicit NoCodeFound(std::string response)
        : Error("no allowed code found in response"),
          response_(std::move(response)) {}
    const std::string& response() const { return response_; }

private:
    std::string response_;
};

class TransportError : public Error {
public:
    using Error::Error;
};

class AuthError : public Error {
public:
    explicit AuthError(int status)
        : Error("authentication rejected by endpoint (HTTP " +
                std::to_string(status) + ")") {}
};

// -- evaluation / interface ---------------------------------------------

class SampleTooLarge : public Error {
public:
    SampleTooLarge(std::size_t requested, std::size_t available)
        : Error("sample of " + std::to_string(requested) +
                " exceeds corpus size " + std::to_string(available)) {}
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& key, const std::string& why)
        : Error("config error: key '" + key + "': " + why), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class BindError : public Error {
public:
    using Error::Error;
};

}  // namespace icdrr
