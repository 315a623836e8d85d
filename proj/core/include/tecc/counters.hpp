#pragma once

// Instrumentation counters compile to nothing when TECC_NO_COUNTERS is defined.
#ifdef TECC_NO_COUNTERS
#define TECC_COUNT(x) ((void)0)
#else
#define TECC_COUNT(x) (++(x))
#endif
