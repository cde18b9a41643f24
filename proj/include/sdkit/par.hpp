#ifndef SDKIT_PAR_HPP
#define SDKIT_PAR_HPP

namespace sdkit::par {

// Effective worker count: min(cap, hardware). The cap comes from
// set_thread_cap() or, if unset, the SDKIT_THREADS environment variable.
// Every parallel kernel in this library produces output that is
// byte-identical for any worker count.
int max_threads();

// 0 restores the default (environment / hardware).
void set_thread_cap(int cap);

} // namespace sdkit::par

#endif
