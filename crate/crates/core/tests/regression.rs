//! Frozen values cross-checked against an independent Smith-normal-form and
//! per-prime brute-force computation.

use farhi_core::farhi::least_period;
use farhi_core::polyarith::poly_parse;
use farhi_core::FarhiInstance;
use num_bigint::BigInt;

const X2_PERIODS: [[&str; 6]; 6] = [
    ["5", "2·5", "5·13", "2·13", "5·13·29", "2·5·13·29"],
    ["3^2", "2·3^2", "3^2·17", "2·3^2·17", "3^2·11·17", "2·3^2·11·17"],
    ["13", "2·13", "3·7·13", "2·3·7·13", "7·13·37", "2·3·13·37"],
    ["17", "2·5·17", "5^2·17", "2^2·5^2·17", "2^2·5^2·17·41", "2^2·5^2·13·17·41"],
    ["3·7", "2·7", "3·7·29", "2·3^2·7·29", "3^2·5·7·29", "2·3^2·5·29"],
    ["5^2", "2·5^2·7", "3·5^2·7·11", "2·3·5^2·7·11", "5^2·7^2·11", "2·3·5^2·7^2·11"],
];

const X3_PERIODS: [[&str; 6]; 6] = [
    ["7", "2·7·13", "3·7·13", "2^2·3·7·13·19·31", "2^2·5·7·13·19·31·43", "2^2·3·5·13·19·31·43"],
    [
        "109",
        "2·43·109",
        "3·31·43·109",
        "2·3·31·43·109·1051",
        "5·31·43·109·1051·15733",
        "2·3·5·31·43·109·433·1051·15733",
    ],
    ["61", "2·61·307", "3·61·307", "2^2·3·61·307·4339", "2^2·5·61·307·3967·4339", "2^2·3·5·61·193·307·3967·4339"],
    ["433", "2·31·433", "3·31·43·433", "2·3·31·43·283·433", "5·31·43·283·433·16057", "2·3·5·31·43·109·283·433·16057"],
    [
        "13^2",
        "2·13^2·739",
        "3·13^2·739",
        "2^2·3·13^2·367·739",
        "2^2·5·13^2·163·367·739",
        "2^2·3·5·13^2·163·367·739·1753",
    ],
    ["7·139", "2·7·37·139", "3·7·37·139", "2·3·7·37·139·181", "5·7·37·139·181·2371", "2·3·5·7^2·37·139·181·2371"],
];

const X3_GENERATORS: [[i64; 6]; 6] = [
    [14, 182, 126, 16492, 39130, 31122],
    [109, 172, 279, 8408, 78665, 15588],
    [122, 614, 54, 17356, 39670, 10422],
    [433, 248, 387, 4528, 80285, 7848],
    [338, 1478, 234, 19084, 8150, 31554],
    [973, 1036, 189, 10136, 82985, 5292],
];

fn check_table(template: &str, expected: &[[&str; 6]; 6]) {
    for b in 1..=6 {
        let f = poly_parse(&template.replace("{b}", &b.to_string())).unwrap();
        for k in 1..=6 {
            let inst = FarhiInstance::new(f.clone(), k).unwrap();
            let t = least_period(&inst).unwrap().t_factored.to_string();
            assert_eq!(t, expected[b - 1][k - 1], "f = {f}, k = {k}");
        }
    }
}

#[test]
fn x2_table() {
    check_table("x^2+{b}", &X2_PERIODS);
}

#[test]
fn x3_table() {
    check_table("x^3+{b}", &X3_PERIODS);
}

#[test]
fn x2_generators_match_closed_formula() {
    for b in 1..=6i64 {
        let inst = FarhiInstance::new(poly_parse(&format!("x^2+{b}")).unwrap(), 6).unwrap();
        for i in 1..=6i64 {
            let expected = if i % 2 == 1 { i * (i * i + 4 * b) } else { 2 * i * (i * i / 4 + b) };
            assert_eq!(inst.constant(i as usize).unwrap(), &BigInt::from(expected), "b = {b}, i = {i}");
        }
    }
}

#[test]
fn x3_generators() {
    for b in 1..=6usize {
        let inst = FarhiInstance::new(poly_parse(&format!("x^3+{b}")).unwrap(), 6).unwrap();
        for i in 1..=6 {
            assert_eq!(inst.constant(i).unwrap(), &BigInt::from(X3_GENERATORS[b - 1][i - 1]), "b = {b}, i = {i}");
        }
    }
}
