macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(named_functions, "named_functions.rs");
example!(rotation_homogeneity, "rotation_homogeneity.rs");
example!(hull_convex_sharpness, "hull_convex_sharpness.rs");
example!(noshiro_warschawski, "noshiro_warschawski.rs");
example!(hurwitz_triangle, "hurwitz_triangle.rs");
example!(asymptotic_ratio, "asymptotic_ratio.rs");
example!(reports, "reports.rs");
