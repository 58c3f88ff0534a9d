//! Shipped example models: the automotive instrument cluster and a small
//! maintainability model.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::id::NodeId;
use crate::model::{
    ActivityNode, Assessability, Attribute, Direction, EntityNode, Fact, FactRef, Impact, Metric,
    QualityModel,
};
use crate::requirements::Stakeholder;

fn id(path: &str) -> NodeId {
    NodeId::from_raw(path)
}

fn attribute(id: &str, description: &str) -> Attribute {
    Attribute {
        id: id.into(),
        description: description.into(),
    }
}

fn fact(entity: &str, attribute: &str, assessability: Assessability, metric: Option<Metric>) -> Fact {
    Fact {
        entity: id(entity),
        attribute: attribute.into(),
        assessability,
        metric,
    }
}

fn impact(entity: &str, attribute: &str, activity: &str, direction: Direction, why: &str) -> Impact {
    Impact {
        fact: FactRef::new(id(entity), attribute),
        activity: id(activity),
        direction,
        justification: why.into(),
    }
}

pub const DISPLAY_POSITION: &str = "vehicle.tics.hardware.display.position";
pub const OUTPUT_REPRESENTATION: &str = "vehicle.tics.software.output_data.representation";

/// Instrument cluster of a vehicle dashboard, driven by the driver and the OEM.
pub fn instrument_cluster() -> QualityModel {
    let activities = vec![
        ActivityNode::new(id("driving"), "Driving"),
        ActivityNode::new(id("tics_dialog"), "TICS Dialog")
            .with_child("view", "View")
            .with_child("perception", "Perception")
            .with_child("processing", "Processing")
            .with_child("input", "Input"),
        ActivityNode::new(id("defect_correction"), "Defect correction"),
        ActivityNode::new(id("system_integration"), "System integration"),
    ];

    let mut display = EntityNode::new(id("vehicle.tics.hardware.display"), "Indicators/display");
    display
        .children
        .push(EntityNode::new(id(DISPLAY_POSITION), "Display position"));
    let mut hardware = EntityNode::new(id("vehicle.tics.hardware"), "Hardware").tagged(["hardware"]);
    hardware.children = vec![
        EntityNode::new(id("vehicle.tics.hardware.operating_devices"), "Operating devices"),
        display,
        EntityNode::new(id("vehicle.tics.hardware.tics_unit"), "TICS unit"),
    ];
    let mut output_data = EntityNode::new(id("vehicle.tics.software.output_data"), "Output data");
    output_data.children.push(EntityNode::new(
        id(OUTPUT_REPRESENTATION),
        "Output data representation",
    ));
    let mut software = EntityNode::new(id("vehicle.tics.software"), "Software").tagged(["code"]);
    software.children = vec![
        EntityNode::new(id("vehicle.tics.software.input_data"), "Input data"),
        output_data,
    ];
    let mut tics = EntityNode::new(id("vehicle.tics"), "TICS");
    tics.children = vec![hardware, software];
    let mut vehicle = EntityNode::new(id("vehicle"), "Vehicle");
    vehicle.children = vec![EntityNode::new(id("vehicle.driver"), "Driver"), tics];

    QualityModel {
        name: "instrument_cluster".into(),
        activities,
        entities: vec![vehicle],
        attributes: vec![
            attribute("appropriateness", "The entity suits its purpose in the given situation."),
            attribute("unambiguousness", "The entity admits exactly one interpretation."),
            attribute("adaptability", "The entity can be adjusted to changing situations."),
        ],
        facts: vec![
            fact(
                DISPLAY_POSITION,
                "appropriateness",
                Assessability::Manual,
                Some(Metric {
                    id: "display_tolerance_deg".into(),
                    unit: "degree".into(),
                    description: "Deviation of the mounted display from its nominal angle.".into(),
                }),
            ),
            fact(OUTPUT_REPRESENTATION, "unambiguousness", Assessability::Manual, None),
            fact(OUTPUT_REPRESENTATION, "adaptability", Assessability::SemiAutomatic, None),
        ],
        impacts: vec![
            impact(
                DISPLAY_POSITION,
                "appropriateness",
                "driving",
                Direction::Positive,
                "An appropriately positioned display keeps the driver's view on the road.",
            ),
            impact(
                OUTPUT_REPRESENTATION,
                "unambiguousness",
                "tics_dialog.processing",
                Direction::Positive,
                "The driver understands the priority of the displayed information.",
            ),
            impact(
                OUTPUT_REPRESENTATION,
                "adaptability",
                "tics_dialog.perception",
                Direction::Positive,
                "Adapting the representation to the driving situation shortens perception time.",
            ),
        ],
    }
}

/// Driver and OEM of the instrument cluster.
pub fn instrument_cluster_stakeholders() -> Vec<Stakeholder> {
    vec![
        Stakeholder {
            id: "driver".into(),
            label: "Driver".into(),
            activities: vec![id("driving"), id("tics_dialog")],
        },
        Stakeholder {
            id: "oem".into(),
            label: "OEM".into(),
            activities: vec![id("system_integration"), id("defect_correction")],
        },
    ]
}

/// Qualitative ratings per activity, most important activity first.
pub fn instrument_cluster_ratings() -> Vec<(NodeId, Vec<String>)> {
    fn list(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| String::from(*s)).collect()
    }
    vec![
        (id("driving"), list(&["comfortable", "safe", "not distracted"])),
        (
            id("tics_dialog"),
            list(&[
                "informative",
                "attractive",
                "correct",
                "current",
                "agile",
                "dynamic",
                "safe",
                "reliable",
                "traditional",
                "accurate",
                "authentic",
                "intuitive",
                "improved",
            ]),
        ),
        (id("defect_correction"), list(&["minimal"])),
        (
            id("system_integration"),
            list(&[
                "minimal hardware requirements",
                "using existing hardware components",
                "interoperable with different hardware",
            ]),
        ),
    ]
}

pub const IDENTIFIERS: &str = "situation.code.identifiers";
pub const VARIABLES: &str = "situation.code.variables";

/// Maintainability model for a developer maintaining source code.
pub fn maintainability() -> QualityModel {
    let maintenance = ActivityNode::new(id("maintenance"), "Maintenance")
        .with_child("concept_location", "Concept location")
        .with_child("impact_analysis", "Impact analysis")
        .with_child("coding", "Coding")
        .with_child("modification", "Modification")
        .with_child("test", "Test");

    let mut code = EntityNode::new(id("situation.code"), "Source code").tagged(["code"]);
    code.children = vec![
        EntityNode::new(id(IDENTIFIERS), "Identifiers"),
        EntityNode::new(id(VARIABLES), "Variables"),
        EntityNode::new(id("situation.code.object_state"), "Object state"),
    ];
    let mut infrastructure = EntityNode::new(id("situation.infrastructure"), "Infrastructure");
    infrastructure.children = vec![EntityNode::new(id("situation.infrastructure.debugger"), "Debugger")];
    let mut situation = EntityNode::new(id("situation"), "Situation");
    situation.children = vec![
        code,
        EntityNode::new(id("situation.documentation"), "Documentation").tagged(["documentation"]),
        infrastructure,
    ];

    QualityModel {
        name: "maintainability".into(),
        activities: vec![maintenance],
        entities: vec![situation],
        attributes: vec![
            attribute("consistency", "The entity does not contradict itself."),
            attribute("completeness", "The entity contains everything it should."),
            attribute("conciseness", "The entity is as short as its purpose allows."),
            attribute("redundancy", "Parts of the entity repeat other parts."),
            attribute("superfluousness", "The entity serves no purpose."),
            attribute("accessibility", "The entity can be read from outside."),
            attribute("existence", "The entity is present."),
        ],
        facts: vec![
            fact(IDENTIFIERS, "conciseness", Assessability::Manual, None),
            fact(
                VARIABLES,
                "superfluousness",
                Assessability::Automatic,
                Some(Metric {
                    id: "needless_variable_count".into(),
                    unit: "count".into(),
                    description: "Number of variables that are never read.".into(),
                }),
            ),
            fact("situation.code.object_state", "accessibility", Assessability::SemiAutomatic, None),
            fact("situation.infrastructure.debugger", "existence", Assessability::Manual, None),
        ],
        impacts: vec![
            impact(
                IDENTIFIERS,
                "conciseness",
                "maintenance.concept_location",
                Direction::Positive,
                "Concise identifier names make concepts easier to find.",
            ),
            impact(
                VARIABLES,
                "superfluousness",
                "maintenance.modification",
                Direction::Negative,
                "Superfluous variables obscure the code that has to be changed.",
            ),
            impact(
                "situation.code.object_state",
                "accessibility",
                "maintenance.test",
                Direction::Positive,
                "Object state accessible from outside can be checked by tests.",
            ),
        ],
    }
}

/// The developer performing maintenance.
pub fn maintainability_stakeholders() -> Vec<Stakeholder> {
    vec![Stakeholder {
        id: "developer".into(),
        label: "Developer".into(),
        activities: vec![id("maintenance")],
    }]
}
