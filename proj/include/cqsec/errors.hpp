#pragma once

#include <stdexcept>
#include <string>

namespace cqsec {

// Base for all library errors. Every failure mode of the public API derives
// from this, so callers can catch one type at the harness boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CQSEC_DEFINE_ERROR(NAME)                                  \
    struct NAME : Error {                                         \
        explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
    }

// cq-algebra
CQSEC_DEFINE_ERROR(NonPsdBlock);
CQSEC_DEFINE_ERROR(NormalizationError);
CQSEC_DEFINE_ERROR(DimensionMismatch);
CQSEC_DEFINE_ERROR(UnknownRegister);
CQSEC_DEFINE_ERROR(ZeroProbabilityEvent);
CQSEC_DEFINE_ERROR(LayoutMismatch);
CQSEC_DEFINE_ERROR(NonClassicalPivot);
CQSEC_DEFINE_ERROR(PartitionError);
CQSEC_DEFINE_ERROR(NameCollision);
CQSEC_DEFINE_ERROR(EventNotDetermined);

// functionality-core
CQSEC_DEFINE_ERROR(DomainViolation);
CQSEC_DEFINE_ERROR(UnknownFunctionality);
CQSEC_DEFINE_ERROR(ParameterOutOfRange);
CQSEC_DEFINE_ERROR(StrategyProtocolMismatch);

// protocol-engine
CQSEC_DEFINE_ERROR(KrausNotTracePreserving);
CQSEC_DEFINE_ERROR(BothSidesDishonest);

// security-verifier
CQSEC_DEFINE_ERROR(WitnessDomainError);
CQSEC_DEFINE_ERROR(SideMismatch);
CQSEC_DEFINE_ERROR(BudgetZero);
CQSEC_DEFINE_ERROR(PreconditionViolated);
CQSEC_DEFINE_ERROR(DefinitionProtocolMismatch);

// hybrid-composer
CQSEC_DEFINE_ERROR(IndexDisagreement);
CQSEC_DEFINE_ERROR(ClassicalityViolation);
CQSEC_DEFINE_ERROR(CertificationMissing);

// harness
CQSEC_DEFINE_ERROR(ParseError);
CQSEC_DEFINE_ERROR(SchemaError);
CQSEC_DEFINE_ERROR(UnresolvedReference);
CQSEC_DEFINE_ERROR(CapExceeded);
CQSEC_DEFINE_ERROR(IOError);

#undef CQSEC_DEFINE_ERROR

}  // namespace cqsec
