//! Every program under `examples/` runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect(concat!(stringify!($name), " should run"));
        }
    };
}

example!(groups);
example!(representations);
example!(free_terms);
example!(closures);
example!(quasi_identities);
example!(equivalence);
example!(counterexample_audit);
example!(text_formats);
