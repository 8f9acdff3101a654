//! The replicated algebra of A_3: projectives, injectives, projective
//! dimensions and the cosyzygy strata.

use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;

fn main() -> mrep::Result<()> {
    let q = Quiver::named("a3")?;
    for m in 1..=3 {
        let rep = ReplicatedAlgebra::new(&q, m, 32003)?;
        println!(
            "A^({m}): {} vertices, dimension {}, global dimension {}",
            rep.alg().num_vertices(),
            rep.dim(),
            rep.global_dimension()?
        );
    }

    let rep = ReplicatedAlgebra::new(&q, 1, 32003)?;
    for x in rep.projectives() {
        let kind = if rep.is_layer0(&x) { "A-module" } else { "projective-injective" };
        println!("projective {} ({kind})", rep.format_dims(&x));
    }
    for x in rep.injectives() {
        println!("injective {}", rep.format_dims(&x));
    }
    for i in 0..rep.n() {
        let s = rep.simple(i, 1)?;
        println!("pd {} = {}", rep.format_dims(&s), rep.pd(&s)?);
    }
    for k in 0..=3 {
        let u: Vec<String> = rep.u_stratum(k)?.iter().map(|x| rep.format_dims(x)).collect();
        println!("U_{k}: {}", u.join(" "));
    }
    println!("{}", serde_json::to_string_pretty(&rep.to_json(&rep.proj(1, 1)?)).unwrap());
    Ok(())
}
