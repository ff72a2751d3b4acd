//! Modules, morphisms, kernels and cokernels, presentations and the
//! Auslander-Reiten translate.

use taumutate::io::{load_algebra, module_to_json, parse_module};
use taumutate::proj::{ar_translate, in_fac, minimal_presentation};
use taumutate::rep::{cokernel, hom_basis, kernel, projective, simple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = load_algebra("examples/data/a2.json")?;
    let p1 = projective(&alg, 0)?;
    let p2 = projective(&alg, 1)?;
    let s1 = simple(&alg, 0)?;
    let s2 = simple(&alg, 1)?;

    let homs = hom_basis(&p2, &p1)?;
    println!("dim Hom(P(2), P(1)) = {}", homs.len());
    let (k, _) = kernel(&homs[0]);
    let (c, _) = cokernel(&homs[0]);
    println!(
        "P(2) -> P(1): kernel {:?}, cokernel {:?}",
        k.dims(),
        c.dims()
    );

    let pres = minimal_presentation(&s1);
    println!(
        "presentation of S(1): P1 = {:?}, P0 = {:?}",
        pres.p1, pres.p0
    );

    let t = ar_translate(&s1);
    println!("tau S(1) has dims {:?} (S(2) is {:?})", t.dims(), s2.dims());
    println!("tau P(1) is zero: {}", ar_translate(&p1).is_zero());
    println!("S(1) in Fac P(1): {}", in_fac(&s1, &p1)?);

    let m = parse_module(&alg, r#"{"dims":{"1":1,"2":1},"maps":{"a":[[5]]}}"#)?;
    println!("module literal round trip: {}", module_to_json(&m));

    let dual = load_algebra("examples/data/dual_numbers.json")?;
    let s = simple(&dual, 0)?;
    println!(
        "k[x]/(x^2): tau S = S: {}",
        ar_translate(&s).dims() == s.dims()
    );
    Ok(())
}
