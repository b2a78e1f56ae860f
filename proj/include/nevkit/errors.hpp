#pragma once

#include <stdexcept>
#include <string>

namespace nevkit {

// Base of everything the library throws on purpose.
struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

#define NEVKIT_ERROR(Name)                                                     \
	struct Name : Error {                                                      \
		explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
	}

NEVKIT_ERROR(IdenticallyZeroDenominator);
NEVKIT_ERROR(DegreeNotOne);
NEVKIT_ERROR(PoleHit);
NEVKIT_ERROR(GapViolated);
NEVKIT_ERROR(ConstantInput);
NEVKIT_ERROR(NotNevanlinnaTau);
NEVKIT_ERROR(NotNevanlinna);
NEVKIT_ERROR(NotMember);
NEVKIT_ERROR(NotInClass);
NEVKIT_ERROR(NotInterlacing);
NEVKIT_ERROR(NotKacMember);
NEVKIT_ERROR(NotInN00);
NEVKIT_ERROR(SpectrumHit);
NEVKIT_ERROR(EvaluationFailure);
NEVKIT_ERROR(NonConvergent);
NEVKIT_ERROR(ParseError);
NEVKIT_ERROR(SchemaMismatch);
// The exact core needs a rational location for this point.
NEVKIT_ERROR(IrrationalRoot);
NEVKIT_ERROR(InvalidArgument);

#undef NEVKIT_ERROR

} // namespace nevkit
