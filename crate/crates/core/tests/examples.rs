macro_rules! example {
    ($name:ident, $path:literal) => {
        mod $name {
            include!($path);

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(lattice, "../examples/lattice.rs");
example!(cohomology, "../examples/cohomology.rs");
example!(slopes, "../examples/slopes.rs");
example!(certify_plane, "../examples/certify_plane.rs");
example!(blowup, "../examples/blowup.rs");
example!(direct_mode, "../examples/direct_mode.rs");
example!(search, "../examples/search.rs");
example!(fault_injection, "../examples/fault_injection.rs");
