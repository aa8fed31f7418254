//! Fixed benchmark instances shared by the criterion benches.

use vislab_core::families::{gen_gadget, gen_gstar, generate};
use vislab_core::{FamilySpec, VisibilityContext};

pub struct Instance {
    pub name: &'static str,
    pub ctx: VisibilityContext,
}

fn family(name: &'static str, spec: FamilySpec) -> Instance {
    Instance {
        name,
        ctx: VisibilityContext::new(generate(&spec).expect("fixed family")),
    }
}

pub fn instances() -> Vec<Instance> {
    let star = generate(&FamilySpec::Star(4)).expect("star");
    vec![
        family("grid-3x4", FamilySpec::Grid(vec![3, 4])),
        family("grid-4x5", FamilySpec::Grid(vec![4, 5])),
        family("kprod-3x4", FamilySpec::CliqueProduct(3, 4)),
        family("grid-3x3x3", FamilySpec::Grid(vec![3, 3, 3])),
        family("skn-4", FamilySpec::SubdividedComplete(4)),
        Instance {
            name: "gstar-4",
            ctx: VisibilityContext::new(gen_gstar(4, 4, 4, 4).expect("G*").0),
        },
        Instance {
            name: "gadget-star4",
            ctx: VisibilityContext::new(gen_gadget(&star, 3).expect("gadget").0),
        },
    ]
}

pub fn instance(name: &str) -> Instance {
    instances()
        .into_iter()
        .find(|i| i.name == name)
        .expect("known instance")
}
