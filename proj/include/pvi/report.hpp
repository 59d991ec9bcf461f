#ifndef PVI_REPORT_HPP
#define PVI_REPORT_HPP

#include "pvi/catalog.hpp"
#include "pvi/implicitize.hpp"

namespace pvi {

struct EntryReport {
    std::string id;
    int lt = 0;
    std::string genus;
    // reference columns
    int b_ref = 0, dmb_ref = 0, terms_ref = 0;
    // residual certification
    bool residual_ok = false;       // some stored theta variant verifies
    bool theta_table_ok = false;    // the table ordering verifies
    bool theta_text_ok = false;     // the section-text ordering verifies
    bool theta_differs = false;
    // curve statistics
    bool exact_tier = false;
    int b = 0, d = 0, terms = 0;
    bool monic_in_u = true;
    bool gaussian_curve = false;
    bool stats_checked = false;   // terms compared only on the exact tier
    bool stats_ok = false;
    // invariance column
    bool invariance_checked = false;
    bool invariance_ok = false;
    std::vector<int> invariance_found;
    // radical certificates
    bool radical_ok = true;  // squarefree + genus match where applicable
    std::string flags;

    bool pass() const {
        return residual_ok && (!stats_checked || stats_ok) &&
               (!invariance_checked || invariance_ok) && radical_ok;
    }
};

struct ReportOptions {
    unsigned jobs = 1;
    bool exact_stats = true;       // exact tier for genus 0/1 entries with b <= 20
    bool check_invariance = true;  // verify homography-invariance columns
    bool verbose = false;
};

EntryReport report_entry(const CatalogEntry& e, const ReportOptions& opt);
std::vector<EntryReport> report_catalog(const Catalog& c, const ReportOptions& opt);

std::string report_markdown(const std::vector<EntryReport>& rows);
std::string report_csv(const std::vector<EntryReport>& rows);

// which theta variant verifies the residual (exact); family entries are
// checked at the two standard samples
void residual_verdict(const CatalogEntry& e, bool& table_ok, bool& text_ok);

}  // namespace pvi

#endif
